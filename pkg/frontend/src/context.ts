import type { ApiClient } from "./api.js";
import type { RouteName } from "./nav.js";
import type { ClientSession } from "./session.js";

export interface AppContext {
  api: ApiClient;
  session: ClientSession | null;
  navigate(route: RouteName): void;
  setSession(session: ClientSession | null): void;
  refresh(): Promise<void>;
}
