/** Error banner fed by API error envelopes. */

import { ApiError } from "./api.js";
import { h } from "./dom.js";

let region: HTMLElement | null = null;

export function mountToasts(parent: HTMLElement): void {
  region = h("div", { class: "toast-region", dataset: { testid: "toasts" } });
  parent.append(region);
}

export function showError(error: unknown): void {
  if (!region) return;
  let text: string;
  if (error instanceof ApiError) {
    text = `${error.envelope.code}: ${error.envelope.message}`;
  } else {
    text = String(error);
  }
  const toast = h("div", { class: "toast toast-error" }, text);
  region.append(toast);
  setTimeout(() => toast.remove(), 6000);
}

export function showInfo(message: string): void {
  if (!region) return;
  const toast = h("div", { class: "toast" }, message);
  region.append(toast);
  setTimeout(() => toast.remove(), 4000);
}
