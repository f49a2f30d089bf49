/** Reset/Cancel restore state and never issue network requests; submits
 * de-duplicate while in flight.  Pure DOM, no live server needed. */

import { describe, expect, it } from "vitest";

import { buildForm, confirmGate } from "../src/forms.js";

describe("form reset and cancel", () => {
  it("reset restores initial values without any submit", async () => {
    let submissions = 0;
    const form = buildForm({
      testid: "t",
      submitLabel: "Go",
      fields: [
        { name: "a", label: "A", value: "initial-a" },
        { name: "b", label: "B", type: "textarea", value: "initial-b" },
      ],
      async onSubmit() {
        submissions += 1;
      },
    });
    document.body.append(form.element);
    const a = form.element.querySelector('input[name="a"]') as HTMLInputElement;
    const b = form.element.querySelector('textarea[name="b"]') as HTMLTextAreaElement;
    a.value = "edited";
    b.value = "also edited";
    (form.element.querySelector('[data-testid="t-reset"]') as HTMLElement).click();
    expect(a.value).toBe("initial-a");
    expect(b.value).toBe("initial-b");
    expect(submissions).toBe(0);
  });

  it("cancel invokes the callback without submitting", () => {
    let submissions = 0;
    let cancelled = 0;
    const form = buildForm({
      testid: "t2",
      submitLabel: "Go",
      fields: [{ name: "a", label: "A" }],
      async onSubmit() {
        submissions += 1;
      },
      onCancel() {
        cancelled += 1;
      },
    });
    document.body.append(form.element);
    (form.element.querySelector('[data-testid="t2-cancel"]') as HTMLElement).click();
    expect(cancelled).toBe(1);
    expect(submissions).toBe(0);
  });

  it("double submit while in flight runs the mutation once", async () => {
    let running = 0;
    let total = 0;
    let release: () => void = () => {};
    const gate = new Promise<void>((resolve) => (release = resolve));
    const form = buildForm({
      testid: "t3",
      submitLabel: "Go",
      fields: [{ name: "a", label: "A" }],
      async onSubmit() {
        running += 1;
        total += 1;
        await gate;
        running -= 1;
      },
    });
    document.body.append(form.element);
    const submit = () =>
      form.element.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
    submit();
    submit(); // ignored: button disabled while the first is pending
    await new Promise((r) => setTimeout(r, 30));
    expect(running).toBe(1);
    release();
    await new Promise((r) => setTimeout(r, 10));
    expect(total).toBe(1);
  });

  it("field errors from envelope details land next to their fields", async () => {
    const form = buildForm({
      testid: "t4",
      submitLabel: "Go",
      fields: [{ name: "email", label: "Email" }],
      async onSubmit(handle) {
        handle.setFieldErrors([{ field: "email", message: "must contain '@'" }]);
      },
    });
    document.body.append(form.element);
    form.element.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
    await new Promise((r) => setTimeout(r, 10));
    expect(form.element.textContent).toContain("must contain '@'");
  });
});

describe("confirm gate", () => {
  it("runs the action only from the dialog confirm", () => {
    let fired = 0;
    const widget = confirmGate({
      testid: "g",
      prompt: "Sure?",
      actionLabel: "Delete",
      onConfirm() {
        fired += 1;
      },
    });
    document.body.append(widget);
    const dialog = widget.querySelector('[data-testid="g-dialog"]') as HTMLElement;
    expect(dialog.hidden).toBe(true);
    (widget.querySelector('[data-testid="g"]') as HTMLElement).click();
    expect(dialog.hidden).toBe(false);
    expect(fired).toBe(0);
    (widget.querySelector('[data-testid="g-cancel"]') as HTMLElement).click();
    expect(fired).toBe(0);
    expect(dialog.hidden).toBe(true);
    (widget.querySelector('[data-testid="g"]') as HTMLElement).click();
    (widget.querySelector('[data-testid="g-confirm"]') as HTMLElement).click();
    expect(fired).toBe(1);
  });
});
