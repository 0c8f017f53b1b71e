/** Assemble and emit finalized MCQs in the corpus dataset-file format. */
import { acceptedDistractors, finalizeBlockers, SessionState } from "./state.js";
import { ClozeRecord } from "./types.js";
import { validateRecord } from "./validate.js";

export function buildRecord(state: SessionState, domain = "other"): ClozeRecord {
  const record: ClozeRecord = {
    id: `ui-${state.sessionId}-${state.finalizedCount + 1}`,
    domain,
    stem: state.stem,
    key: state.key,
    distractors: acceptedDistractors(state),
  };
  const problems = [...finalizeBlockers(state), ...validateRecord(record)];
  if (problems.length) {
    throw new Error(`record fails validation: ${problems.join("; ")}`);
  }
  return record;
}

export function recordToLine(record: ClozeRecord): string {
  return JSON.stringify(record);
}

/** Browser download of one finalized record as a one-line dataset file. */
export function downloadRecord(record: ClozeRecord, doc: Document = document): void {
  const blob = new Blob([recordToLine(record) + "\n"],
                        { type: "application/x-ndjson" });
  const url = URL.createObjectURL(blob);
  const link = doc.createElement("a");
  link.href = url;
  link.download = `${record.id}.jsonl`;
  doc.body.appendChild(link);
  link.click();
  link.remove();
  URL.revokeObjectURL(url);
}
