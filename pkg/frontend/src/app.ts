/** DOM wiring. The view is rendered from state alone; every change flows
 * through dispatch() so the event log fully determines what is shown. */
import { ApiClient } from "./api.js";
import { buildFeedbackBody } from "./api.js";
import { buildRecord, downloadRecord } from "./export.js";
import {
  canFinalize,
  effectiveVerdict,
  finalizeBlockers,
  initialState,
  reduce,
  replay,
  SessionEvent,
  SessionState,
} from "./state.js";
import { GenerationRequest, Verdict } from "./types.js";
import { validateKey, validateStem } from "./validate.js";

const api = new ApiClient("");
const sessionId = `s${Date.now().toString(36)}${Math.floor(Math.random() * 1e6).toString(36)}`;

const events: SessionEvent[] = [];
let state: SessionState = initialState(sessionId);
const inFlight = new Set<string>();

function dispatch(event: SessionEvent): void {
  events.push(event);
  state = reduce(state, event);
  if (console && typeof console.assert === "function") {
    // replaying the log must reproduce the state (kept cheap: shallow check)
    console.assert(replay(sessionId, events).candidates.length === state.candidates.length);
  }
  render();
}

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function currentRequest(): GenerationRequest {
  return {
    stem: state.stem,
    key: state.key,
    n: state.n,
    options: { use_web_score: state.useWebScore },
  };
}

async function requestDistractors(): Promise<void> {
  const stemProblem = validateStem(state.stem);
  const keyProblem = validateKey(state.key);
  el("stem-error").textContent = stemProblem ?? "";
  el("key-error").textContent = keyProblem ?? "";
  if (stemProblem || keyProblem) return;
  dispatch({ type: "request_started" });
  try {
    const response = await api.requestDistractors(currentRequest());
    dispatch({
      type: "distractors_received",
      distractors: response.distractors,
      fallbackUsed: response.fallback_used,
    });
  } catch (error) {
    dispatch({ type: "request_failed", message: String(error) });
  }
}

async function submitVerdict(surface: string, verdict: Verdict): Promise<void> {
  if (inFlight.has(surface)) return; // serialize per candidate
  const row = state.candidates.find((r) => r.surface === surface);
  if (!row) return;
  if (verdict === "edited" && !row.replacement.trim()) {
    dispatch({ type: "verdict_rejected", surface,
               message: "an edited verdict needs replacement text" });
    return;
  }
  inFlight.add(surface);
  dispatch({ type: "verdict_submitted", surface, verdict });
  try {
    await api.submitFeedback(buildFeedbackBody(
      currentRequest(), surface, verdict,
      verdict === "edited" ? row.replacement.trim() : null, sessionId,
    ));
    dispatch({ type: "verdict_acknowledged", surface });
  } catch (error) {
    dispatch({ type: "verdict_rejected", surface, message: String(error) });
  } finally {
    inFlight.delete(surface);
  }
}

function finalize(): void {
  if (!canFinalize(state)) return;
  const record = buildRecord(state);
  downloadRecord(record);
  el("preview").textContent = JSON.stringify(record, null, 2);
  dispatch({ type: "finalized" });
}

function verdictBadge(verdict: Verdict | null, pendingNow: boolean): string {
  if (!verdict) return "";
  const label = pendingNow ? `${verdict}…` : verdict;
  return `<span class="badge badge-${verdict}">${label}</span>`;
}

function render(): void {
  el<HTMLButtonElement>("request-button").disabled = state.phase === "loading";
  const banner = el("banner");
  banner.hidden = !state.banner;
  el("banner-text").textContent = state.banner ?? "";

  el("fallback-badge").hidden = !(state.phase === "ready" && state.fallbackUsed);

  const list = el("candidates");
  list.innerHTML = "";
  for (const row of state.candidates) {
    const verdict = effectiveVerdict(row);
    const item = document.createElement("li");
    item.className = "candidate";
    item.innerHTML = `
      <span class="rank">#${row.rank}</span>
      <span class="surface">${row.surface}</span>
      <span class="score">${row.score.toFixed(4)}</span>
      ${verdictBadge(verdict, row.pending !== null)}
      <span class="row-error">${row.error ?? ""}</span>
      <span class="actions">
        <button data-surface="${row.surface}" data-verdict="accepted">accept</button>
        <button data-surface="${row.surface}" data-verdict="rejected">reject</button>
        <input class="replacement" data-surface="${row.surface}"
               placeholder="replacement…" value="${row.replacement}">
        <button data-surface="${row.surface}" data-verdict="edited">save edit</button>
      </span>`;
    list.appendChild(item);
  }
  list.querySelectorAll("button[data-verdict]").forEach((button) => {
    button.addEventListener("click", () => {
      const surface = (button as HTMLElement).dataset.surface ?? "";
      const verdict = (button as HTMLElement).dataset.verdict as Verdict;
      void submitVerdict(surface, verdict);
    });
  });
  list.querySelectorAll("input.replacement").forEach((input) => {
    input.addEventListener("input", () => {
      dispatchReplacement(input as HTMLInputElement);
    });
  });

  const blockers = finalizeBlockers(state);
  el<HTMLButtonElement>("finalize-button").disabled = blockers.length > 0;
  el("finalize-blockers").textContent =
    state.candidates.length && blockers.length ? blockers.join("; ") : "";
  el("accepted-count").textContent =
    String(state.candidates.filter((r) => effectiveVerdict(r) === "accepted" ||
                                          effectiveVerdict(r) === "edited").length);
}

function dispatchReplacement(input: HTMLInputElement): void {
  const surface = input.dataset.surface ?? "";
  // update state without re-rendering, so the input keeps focus
  const event: SessionEvent = { type: "replacement_changed", surface, text: input.value };
  events.push(event);
  state = reduce(state, event);
}

export function start(): void {
  el<HTMLTextAreaElement>("stem").addEventListener("input", (e) => {
    dispatch({ type: "form_changed", stem: (e.target as HTMLTextAreaElement).value });
  });
  el<HTMLInputElement>("key").addEventListener("input", (e) => {
    dispatch({ type: "form_changed", key: (e.target as HTMLInputElement).value });
  });
  el<HTMLInputElement>("n").addEventListener("input", (e) => {
    dispatch({ type: "form_changed", n: Number((e.target as HTMLInputElement).value) || 3 });
  });
  el<HTMLInputElement>("use-web").addEventListener("change", (e) => {
    dispatch({ type: "form_changed",
               useWebScore: (e.target as HTMLInputElement).checked });
    if (state.candidates.length) void requestDistractors(); // reissue with new option
  });
  el("request-button").addEventListener("click", () => void requestDistractors());
  el("banner-retry").addEventListener("click", () => void requestDistractors());
  el("banner-dismiss").addEventListener("click", () =>
    dispatch({ type: "banner_dismissed" }));
  el("finalize-button").addEventListener("click", finalize);

  void api.health().then(
    (h) => { el("health").textContent = `model ${h.model_id} (schema v${h.schema_version})`; },
    () => { el("health").textContent = "service unreachable"; },
  );
  render();
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  start();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", start);
}
