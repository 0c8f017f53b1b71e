/** Wire types of the distractor service HTTP API, mirrored verbatim. */

export interface GenerationOptions {
  use_web_score?: boolean;
  model_id?: string | null;
}

export interface GenerationRequest {
  stem: string;
  key: string;
  n: number;
  options: GenerationOptions;
}

export interface DistractorOut {
  surface: string;
  score: number;
  rank: number;
}

export interface GenerationResponse {
  distractors: DistractorOut[];
  fallback_used: boolean;
  timing_ms: number;
}

export type Verdict = "accepted" | "rejected" | "edited";

export interface FeedbackBody {
  request: GenerationRequest;
  surface: string;
  verdict: Verdict;
  replacement: string | null;
  session_id: string;
}

/** One finalized MCQ in the corpus dataset-file format. */
export interface ClozeRecord {
  id: string;
  domain: string;
  stem: string;
  key: string;
  distractors: string[];
}

export const BLANK = "____";
