// Wire types for the three /api/v1 endpoints. Field names follow the JSON
// the service emits, so responses are used as-is with no mapping layer.

export type Language = "xh" | "yo";

export type Verdict = "accept" | "wrong_label" | "bad_rewrite";

export interface DetoxRequest {
  text: string;
  language: Language;
}

export interface TokenContribution {
  term: string;
  weight: number;
  value: number;
  contribution: number;
}

export interface DetoxResponse {
  label: "TOXIC" | "NON-TOXIC";
  probability: number;
  output_text: string;
  method: string;
  replaced_tokens: [string, string][];
  token_contributions: TokenContribution[];
}

export interface FeedbackRequest {
  language: Language;
  input_text: string;
  system_output: string;
  verdict: Verdict;
  corrected_text?: string;
  annotator_handle?: string;
}

export interface FeedbackResponse {
  id: number;
}

export interface ModelVersion {
  file_sha256: string;
  config_fingerprint: string;
  trained_at: string;
}

export interface HealthResponse {
  status: "ok" | "degraded";
  models_loaded: string[];
  versions: Record<string, ModelVersion>;
}
