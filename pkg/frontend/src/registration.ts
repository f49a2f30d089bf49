/**
 * Registration button state machine for the arrangement detail page.
 *
 * The button disables whenever the API would refuse the registration:
 * already registered, at capacity, past the start time, or while a request
 * is in flight.  Success and rejection outcomes render distinctly.
 */

export interface RegistrationInputs {
  hasApplied: boolean;
  applyCount: number;
  maxParticipants: number;
  startTime: string; // ISO-8601
  inFlight?: boolean;
  now?: number; // epoch ms override for tests
}

export type RegistrationReason = "open" | "has_applied" | "full" | "closed" | "busy";

export interface RegistrationButtonState {
  disabled: boolean;
  label: string;
  reason: RegistrationReason;
}

export function registrationButtonState(inputs: RegistrationInputs): RegistrationButtonState {
  const now = inputs.now ?? Date.now();
  if (inputs.inFlight) {
    return { disabled: true, label: "Registering…", reason: "busy" };
  }
  if (inputs.hasApplied) {
    return { disabled: true, label: "Registered", reason: "has_applied" };
  }
  if (Date.parse(inputs.startTime) <= now) {
    return { disabled: true, label: "Closed", reason: "closed" };
  }
  if (inputs.applyCount >= inputs.maxParticipants) {
    return { disabled: true, label: "Full", reason: "full" };
  }
  return { disabled: false, label: "Register", reason: "open" };
}
