/** Ranked-recipe panel; rows render in server order and click through
 * to that recipe's ticket. */

import type { Recommendation } from "./types.js";

export function renderRecommendations(
  container: HTMLElement,
  rows: Recommendation[],
  stale: boolean,
  onRowClick: (recipeId: string) => void,
): void {
  container.textContent = "";
  container.classList.toggle("stale", stale);

  if (rows.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-note";
    empty.textContent = "No recommendations yet.";
    container.appendChild(empty);
    return;
  }

  const table = document.createElement("table");
  table.className = "recommend-table";
  const head = table.createTHead().insertRow();
  for (const column of ["#", "recipe", "total food miles", "sourced", "missing"]) {
    const th = document.createElement("th");
    th.textContent = column;
    head.appendChild(th);
  }
  const body = table.createTBody();
  rows.forEach((recommendation, rank) => {
    const row = body.insertRow();
    row.className = "recommend-row";
    row.dataset["recipeId"] = recommendation.recipe_id;
    const cells = [
      String(rank + 1),
      recommendation.recipe_id,
      recommendation.total_food_miles.toFixed(1),
      String(recommendation.sourced_count),
      String(recommendation.missing_count),
    ];
    for (const text of cells) {
      const td = document.createElement("td");
      td.textContent = text;
      row.appendChild(td);
    }
    row.addEventListener("click", () => onRowClick(recommendation.recipe_id));
  });
  container.appendChild(table);
}
