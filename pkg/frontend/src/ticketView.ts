/** Sourcing-ticket panel: the five-column table, missing chips, total. */

import type { Ticket } from "./types.js";

export const TICKET_COLUMNS = [
  "ingredient",
  "supplier",
  "Product offered by supplier",
  "Distance in miles",
  "Total food miles",
] as const;

function cell(row: HTMLTableRowElement, text: string): void {
  const td = document.createElement("td");
  td.textContent = text;
  row.appendChild(td);
}

export function renderTicket(container: HTMLElement, ticket: Ticket, stale: boolean): void {
  container.textContent = "";
  container.classList.toggle("stale", stale);

  const heading = document.createElement("div");
  heading.className = "ticket-total";
  heading.textContent = `Total food miles: ${ticket.total_food_miles.toFixed(1)}`;
  container.appendChild(heading);

  const table = document.createElement("table");
  table.className = "ticket-table";
  const head = table.createTHead().insertRow();
  for (const column of TICKET_COLUMNS) {
    const th = document.createElement("th");
    th.textContent = column;
    head.appendChild(th);
  }
  const body = table.createTBody();
  for (const line of ticket.lines) {
    const row = body.insertRow();
    cell(row, line.ingredient);
    cell(row, line.producer_address);
    cell(row, line.product_offered);
    cell(row, line.distance_miles.toFixed(1));
    cell(row, ticket.total_food_miles.toFixed(1));
  }
  container.appendChild(table);

  if (ticket.missing.length > 0) {
    const label = document.createElement("div");
    label.className = "missing-label";
    label.textContent = "Missing ingredients:";
    container.appendChild(label);
    const chips = document.createElement("ul");
    chips.className = "missing-chips";
    for (const name of ticket.missing) {
      const chip = document.createElement("li");
      chip.className = "chip";
      chip.textContent = name;
      chips.appendChild(chip);
    }
    container.appendChild(chips);
  }
}
