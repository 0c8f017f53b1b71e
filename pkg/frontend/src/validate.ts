/** Client-side mirrors of the dataset-file invariants, so finalized
 * records always pass the corpus loader. */
import { BLANK, ClozeRecord } from "./types.js";

const TOKEN_RE = /[0-9A-Za-zÀ-￿]+/g;

export function tokenize(text: string): string[] {
  return text.match(TOKEN_RE) ?? [];
}

export function blankCount(stem: string): number {
  return stem.split(BLANK).length - 1;
}

export function validateStem(stem: string): string | null {
  const count = blankCount(stem);
  if (count === 0) return `stem must contain the blank marker ${BLANK}`;
  if (count > 1) return `stem must contain exactly one ${BLANK} marker, found ${count}`;
  return null;
}

export function validateKey(key: string): string | null {
  const tokens = tokenize(key);
  if (tokens.length !== 1) return "key must be a single token";
  return null;
}

export function validateReplacement(text: string): string | null {
  if (!text.trim()) return "an edited verdict needs replacement text";
  return null;
}

/** Reasons the current accepted set cannot be finalized; empty = ok. */
export function finalizeProblems(key: string, accepted: string[]): string[] {
  const problems: string[] = [];
  if (accepted.length < 2) {
    problems.push("need at least 2 accepted distractors");
  }
  const folded = accepted.map((d) => d.toLowerCase());
  if (folded.includes(key.toLowerCase())) {
    problems.push("an accepted distractor equals the key");
  }
  if (new Set(folded).size !== folded.length) {
    problems.push("accepted distractors must be distinct");
  }
  return problems;
}

export function validateRecord(record: ClozeRecord): string[] {
  const problems: string[] = [];
  const stemProblem = validateStem(record.stem);
  if (stemProblem) problems.push(stemProblem);
  const keyProblem = validateKey(record.key);
  if (keyProblem) problems.push(keyProblem);
  if (record.distractors.length === 0) problems.push("distractors must be non-empty");
  problems.push(...finalizeProblems(record.key, record.distractors).filter(
    (p) => p !== "need at least 2 accepted distractors",
  ));
  return problems;
}
