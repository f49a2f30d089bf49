/**
 * Spawns a live api-service seeded with the canonical fixture for UI
 * contract tests.  Each test file gets its own server on a free port and an
 * isolated store, so files can run in parallel.
 */

import { type ChildProcess, execFile, spawn } from "node:child_process";
import { mkdtempSync } from "node:fs";
import http from "node:http";
import net from "node:net";
import { tmpdir } from "node:os";
import path from "node:path";
import { promisify } from "node:util";

import { ApiClient, type Role } from "../../src/api.js";

const execFileAsync = promisify(execFile);

/** Plain node:http GET, immune to the DOM environment's same-origin rules. */
function rawGet(url: string): Promise<number> {
  return new Promise((resolve, reject) => {
    const request = http.get(url, (response) => {
      response.resume();
      resolve(response.statusCode ?? 0);
    });
    request.on("error", reject);
  });
}

/**
 * Point the happy-dom page at the live server's origin so the client's
 * fetch calls are same-origin, exactly like the served SPA.
 */
export function setPageUrl(baseUrl: string): void {
  (window as unknown as { happyDOM?: { setURL(url: string): void } }).happyDOM?.setURL(
    `${baseUrl}/`,
  );
}

export interface LiveServer {
  baseUrl: string;
  stop(): void;
}

function freePort(): Promise<number> {
  return new Promise((resolve, reject) => {
    const probe = net.createServer();
    probe.listen(0, "127.0.0.1", () => {
      const address = probe.address();
      if (address && typeof address === "object") {
        const port = address.port;
        probe.close(() => resolve(port));
      } else {
        reject(new Error("no port"));
      }
    });
  });
}

async function waitReady(baseUrl: string, child: ChildProcess): Promise<void> {
  const deadline = Date.now() + 20_000;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    if (child.exitCode !== null) throw new Error(`server exited: ${child.exitCode}`);
    try {
      if ((await rawGet(`${baseUrl}/api/dict/industry`)) === 200) return;
    } catch (error) {
      lastError = error;
    }
    await new Promise((r) => setTimeout(r, 150));
  }
  throw new Error(`server not ready: ${lastError}`);
}

export async function startServer(): Promise<LiveServer> {
  const port = await freePort();
  const dir = mkdtempSync(path.join(tmpdir(), "campus-recruit-ui-"));
  const db = path.join(dir, "ui.db");
  await execFileAsync("python3", ["-m", "campus_recruit.cli", "seed", "--store", db], {
    cwd: dir,
  });
  const child = spawn(
    "python3",
    [
      "-m", "campus_recruit.cli", "serve",
      "--store", db,
      "--host", "127.0.0.1",
      "--port", String(port),
    ],
    { cwd: dir, stdio: "ignore" },
  );
  const baseUrl = `http://127.0.0.1:${port}`;
  await waitReady(baseUrl, child);
  setPageUrl(baseUrl);
  return {
    baseUrl,
    stop() {
      child.kill("SIGTERM");
    },
  };
}

/** Counting fetch wrapper so tests can assert "no request was sent". */
export function countingFetch(): {
  fn: typeof fetch;
  calls: { url: string; method: string }[];
} {
  const calls: { url: string; method: string }[] = [];
  const fn = (async (input: RequestInfo | URL, init?: RequestInit) => {
    calls.push({ url: String(input), method: init?.method ?? "GET" });
    return fetch(input, init);
  }) as typeof fetch;
  return { fn, calls };
}

export async function loginToken(
  baseUrl: string,
  role: Role,
  id: string,
  password: string,
): Promise<string> {
  const client = new ApiClient(baseUrl);
  const info = await client.login(role, id, password);
  return info.token;
}

/** Poll until the (possibly async) probe returns a truthy value. */
export async function waitFor<T>(
  probe: () => T | null | undefined | false | Promise<T | null | undefined | false>,
  timeoutMs = 8000,
): Promise<T> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    const value = await probe();
    if (value) return value;
    await new Promise((r) => setTimeout(r, 40));
  }
  throw new Error("waitFor: condition never became true");
}
