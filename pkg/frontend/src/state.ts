/** Session state as a pure fold over events: replaying the event log
 * reproduces the view exactly. Server calls happen outside the reducer;
 * their outcomes re-enter as events (optimistic update + rollback). */
import { DistractorOut, Verdict } from "./types.js";
import { finalizeProblems } from "./validate.js";

export interface CandidateRow {
  surface: string;
  score: number;
  rank: number;
  /** last server-acknowledged verdict */
  verdict: Verdict | null;
  /** optimistic verdict awaiting the server's answer */
  pending: Verdict | null;
  replacement: string;
  error: string | null;
}

export interface SessionState {
  sessionId: string;
  stem: string;
  key: string;
  n: number;
  useWebScore: boolean;
  phase: "idle" | "loading" | "ready";
  banner: string | null;
  fallbackUsed: boolean;
  candidates: CandidateRow[];
  finalizedCount: number;
}

export type SessionEvent =
  | { type: "form_changed"; stem?: string; key?: string; n?: number; useWebScore?: boolean }
  | { type: "request_started" }
  | { type: "distractors_received"; distractors: DistractorOut[]; fallbackUsed: boolean }
  | { type: "request_failed"; message: string }
  | { type: "banner_dismissed" }
  | { type: "replacement_changed"; surface: string; text: string }
  | { type: "verdict_submitted"; surface: string; verdict: Verdict }
  | { type: "verdict_acknowledged"; surface: string }
  | { type: "verdict_rejected"; surface: string; message: string }
  | { type: "finalized" };

export function initialState(sessionId: string): SessionState {
  return {
    sessionId,
    stem: "",
    key: "",
    n: 3,
    useWebScore: false,
    phase: "idle",
    banner: null,
    fallbackUsed: false,
    candidates: [],
    finalizedCount: 0,
  };
}

function updateRow(
  state: SessionState,
  surface: string,
  update: (row: CandidateRow) => CandidateRow,
): SessionState {
  return {
    ...state,
    candidates: state.candidates.map((row) =>
      row.surface === surface ? update(row) : row,
    ),
  };
}

export function reduce(state: SessionState, event: SessionEvent): SessionState {
  switch (event.type) {
    case "form_changed":
      return {
        ...state,
        stem: event.stem ?? state.stem,
        key: event.key ?? state.key,
        n: event.n ?? state.n,
        useWebScore: event.useWebScore ?? state.useWebScore,
      };
    case "request_started":
      return { ...state, phase: "loading", banner: null };
    case "distractors_received":
      return {
        ...state,
        phase: "ready",
        fallbackUsed: event.fallbackUsed,
        candidates: event.distractors.map((d) => ({
          surface: d.surface,
          score: d.score,
          rank: d.rank,
          verdict: null,
          pending: null,
          replacement: "",
          error: null,
        })),
      };
    case "request_failed":
      return { ...state, phase: state.candidates.length ? "ready" : "idle",
               banner: event.message };
    case "banner_dismissed":
      return { ...state, banner: null };
    case "replacement_changed":
      return updateRow(state, event.surface, (row) => ({
        ...row, replacement: event.text, error: null,
      }));
    case "verdict_submitted":
      return updateRow(state, event.surface, (row) => ({
        ...row, pending: event.verdict, error: null,
      }));
    case "verdict_acknowledged":
      return updateRow(state, event.surface, (row) => ({
        ...row,
        verdict: row.pending ?? row.verdict,
        pending: null,
      }));
    case "verdict_rejected":
      return updateRow(state, event.surface, (row) => ({
        ...row, pending: null, error: event.message,
      }));
    case "finalized":
      return { ...state, finalizedCount: state.finalizedCount + 1 };
    default:
      return state;
  }
}

export function replay(sessionId: string, events: SessionEvent[]): SessionState {
  return events.reduce(reduce, initialState(sessionId));
}

/** Verdict currently shown for a row (optimistic first). */
export function effectiveVerdict(row: CandidateRow): Verdict | null {
  return row.pending ?? row.verdict;
}

/** Distractor surfaces going into the assembled MCQ (edits use the
 * replacement text). */
export function acceptedDistractors(state: SessionState): string[] {
  const out: string[] = [];
  for (const row of state.candidates) {
    const verdict = effectiveVerdict(row);
    if (verdict === "accepted") out.push(row.surface);
    else if (verdict === "edited" && row.replacement.trim()) {
      out.push(row.replacement.trim());
    }
  }
  return out;
}

export function acceptedCount(state: SessionState): number {
  return acceptedDistractors(state).length;
}

export function finalizeBlockers(state: SessionState): string[] {
  return finalizeProblems(state.key, acceptedDistractors(state));
}

export function canFinalize(state: SessionState): boolean {
  return finalizeBlockers(state).length === 0;
}
