/**
 * Form behaviors shared by every action form:
 *
 * - Reset restores the values captured when the form rendered and Cancel
 *   dismisses the form; neither ever issues a network request.
 * - Submission is de-duplicated: the submit button disables while a
 *   mutation is in flight.
 * - Destructive actions go through a two-step confirmation gate; nothing is
 *   sent until the second, explicit confirmation.
 */

import { h } from "./dom.js";
import { ApiError } from "./api.js";

export type FieldSpec = {
  name: string;
  label: string;
  type?: "text" | "password" | "number" | "date" | "textarea" | "select" | "file";
  value?: string;
  options?: { value: string; label: string }[];
  required?: boolean;
};

export interface FormHandle {
  element: HTMLFormElement;
  values(): Record<string, string>;
  file(name: string): File | undefined;
  reset(): void;
  setError(message: string): void;
  setFieldErrors(details: { field: string; message: string }[]): void;
}

export function buildForm(options: {
  testid: string;
  fields: FieldSpec[];
  submitLabel: string;
  onSubmit: (form: FormHandle) => Promise<void>;
  onCancel?: () => void;
  validate?: (form: FormHandle) => string | null;
}): FormHandle {
  const initial = new Map(options.fields.map((f) => [f.name, f.value ?? ""]));
  const errorBox = h("p", { class: "form-error", dataset: { testid: `${options.testid}-error` } });
  const inputs = new Map<string, HTMLInputElement | HTMLTextAreaElement | HTMLSelectElement>();
  const fieldErrors = new Map<string, HTMLElement>();

  const rows = options.fields.map((field) => {
    let input: HTMLInputElement | HTMLTextAreaElement | HTMLSelectElement;
    if (field.type === "textarea") {
      input = h("textarea", { name: field.name, value: field.value ?? "" });
    } else if (field.type === "select") {
      input = h(
        "select",
        { name: field.name },
        ...(field.options ?? []).map((o) =>
          h("option", { value: o.value, selected: o.value === field.value }, o.label),
        ),
      );
    } else {
      input = h("input", {
        name: field.name,
        type: field.type ?? "text",
        value: field.type === "file" ? undefined : field.value ?? "",
      });
    }
    inputs.set(field.name, input);
    const fieldError = h("small", { class: "field-error" });
    fieldErrors.set(field.name, fieldError);
    return h("label", { class: "form-row" }, `${field.label} `, input, fieldError);
  });

  const submit = h("button", { type: "submit", dataset: { testid: `${options.testid}-submit` } },
    options.submitLabel);
  const resetButton = h(
    "button",
    { type: "button", dataset: { testid: `${options.testid}-reset` } },
    "Reset",
  );
  const cancelButton = options.onCancel
    ? h("button", { type: "button", dataset: { testid: `${options.testid}-cancel` } }, "Cancel")
    : null;

  const form = h(
    "form",
    { class: "action-form", dataset: { testid: options.testid }, novalidate: true },
    ...rows,
    errorBox,
    h("div", { class: "form-buttons" }, submit, resetButton, cancelButton),
  );

  const handle: FormHandle = {
    element: form,
    values() {
      const out: Record<string, string> = {};
      for (const [name, input] of inputs) {
        if (input instanceof HTMLInputElement && input.type === "file") continue;
        out[name] = input.value;
      }
      return out;
    },
    file(name: string) {
      const input = inputs.get(name);
      if (input instanceof HTMLInputElement && input.type === "file") {
        return input.files?.[0] ?? undefined;
      }
      return undefined;
    },
    reset() {
      for (const [name, input] of inputs) {
        if (input instanceof HTMLInputElement && input.type === "file") {
          input.value = "";
        } else {
          input.value = initial.get(name) ?? "";
          input.dispatchEvent(new Event("input"));
        }
      }
      handle.setError("");
      handle.setFieldErrors([]);
    },
    setError(message: string) {
      errorBox.textContent = message;
    },
    setFieldErrors(details) {
      for (const box of fieldErrors.values()) box.textContent = "";
      for (const detail of details) {
        fieldErrors.get(detail.field)?.append(detail.message);
      }
    },
  };

  resetButton.addEventListener("click", () => handle.reset());
  cancelButton?.addEventListener("click", () => options.onCancel?.());

  form.addEventListener("submit", async (event) => {
    event.preventDefault();
    if (submit.disabled) return; // in-flight de-duplication
    handle.setError("");
    handle.setFieldErrors([]);
    const problem = options.validate?.(handle) ?? null;
    if (problem) {
      handle.setError(problem);
      return;
    }
    submit.disabled = true;
    try {
      await options.onSubmit(handle);
    } catch (error) {
      if (error instanceof ApiError) {
        handle.setError(`${error.envelope.code}: ${error.envelope.message}`);
        if (error.envelope.details) handle.setFieldErrors(error.envelope.details);
      } else {
        handle.setError(String(error));
      }
    } finally {
      submit.disabled = false;
    }
  });

  return handle;
}

/**
 * Two-step confirmation for destructive actions.  The first activation only
 * reveals the dialog; the destructive callback runs solely from the
 * dialog's confirm button.
 */
export function confirmGate(options: {
  testid: string;
  prompt: string;
  actionLabel: string;
  onConfirm: () => Promise<void> | void;
}): HTMLElement {
  const dialog = h(
    "span",
    { class: "confirm-dialog", hidden: true, dataset: { testid: `${options.testid}-dialog` } },
    `${options.prompt} `,
    h(
      "button",
      {
        type: "button",
        dataset: { testid: `${options.testid}-confirm` },
        onClick: async () => {
          dialog.hidden = true;
          await options.onConfirm();
        },
      },
      "Confirm",
    ),
    h(
      "button",
      {
        type: "button",
        dataset: { testid: `${options.testid}-cancel` },
        onClick: () => {
          dialog.hidden = true;
        },
      },
      "Cancel",
    ),
  );
  const trigger = h(
    "button",
    {
      type: "button",
      dataset: { testid: options.testid },
      onClick: () => {
        dialog.hidden = false;
      },
    },
    options.actionLabel,
  );
  return h("span", {}, trigger, dialog);
}
