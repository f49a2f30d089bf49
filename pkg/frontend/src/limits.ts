/**
 * Client-side mirrors of the server's field limits.  The server remains the
 * authority; these exist so over-limit input is rejected before any request
 * is sent (and the user sees a live character counter).
 */

export const FIELD_LIMITS: Record<string, number> = {
  experience: 400,
  skill: 400,
  review_note: 400,
};

export interface LimitCheck {
  length: number;
  limit: number;
  remaining: number;
  over: boolean;
}

export function checkLimit(value: string, limit: number): LimitCheck {
  return {
    length: value.length,
    limit,
    remaining: limit - value.length,
    over: value.length > limit,
  };
}

/**
 * Attach a live `n / limit` counter under a textarea.  Returns a validity
 * probe the submit handler consults; over-limit input never reaches the
 * network.
 */
export function attachCounter(
  textarea: HTMLTextAreaElement,
  limit: number,
): { valid(): boolean; element: HTMLElement } {
  const counter = document.createElement("small");
  counter.className = "char-counter";
  counter.dataset.testid = `counter-${textarea.name}`;
  const update = () => {
    const check = checkLimit(textarea.value, limit);
    counter.textContent = `${check.length} / ${limit}`;
    counter.classList.toggle("over-limit", check.over);
  };
  textarea.addEventListener("input", update);
  update();
  textarea.insertAdjacentElement("afterend", counter);
  return {
    element: counter,
    valid: () => !checkLimit(textarea.value, limit).over,
  };
}
