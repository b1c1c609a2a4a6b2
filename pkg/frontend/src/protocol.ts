// Wire types of the session protocol. Key names match the server's
// format exactly; keep in sync with the engine's trace schema.

export interface PoseObj {
  p: [number, number, number];
  q: [number, number, number, number];
}

export interface FrameMsg {
  type: "frame";
  t: number;
  head: PoseObj;
  gaze: { o: [number, number, number]; d: [number, number, number]; valid: boolean };
  hand: {
    p: [number, number, number];
    q: [number, number, number, number];
    ext: [number, number, number, number];
    gap: number;
    valid: boolean;
  };
}

export interface ElementObj {
  id: string;
  rect: [number, number, number, number]; // umin, vmin, umax, vmax
  kind: string;
  label: string;
  snap_exempt: boolean;
}

export interface ViewModelObj {
  app_id: string;
  elements: ElementObj[];
  top_bar: string[];
  scroll: { offset: [number, number] } | null;
  depth: { layer: number; layer_count: number } | null;
  map: { center: [number, number]; scale: number } | null;
}

export interface StateMsg {
  type: "state";
  t: number;
  fsm: string;
  summon_progress: number | null;
  ui_pose: PoseObj;
  extent: [number, number];
  reference_frame: string;
  view_model: ViewModelObj;
  hover: string | null;
}

export interface EventMsg {
  type: "event";
  t: number;
  event: string;
  [field: string]: unknown;
}

export interface ErrorMsg {
  type: "error";
  message: string;
}

export type ServerMsg = StateMsg | EventMsg | ErrorMsg;

export function parseServerMsg(raw: string): ServerMsg {
  const msg = JSON.parse(raw);
  if (msg === null || typeof msg !== "object" || typeof msg.type !== "string") {
    throw new Error("malformed server message");
  }
  return msg as ServerMsg;
}

const isVec = (v: unknown, n: number): boolean =>
  Array.isArray(v) && v.length === n && v.every((c) => Number.isFinite(c));

const isUnit = (v: number[]): boolean =>
  Math.abs(Math.hypot(...v) - 1) < 1e-6;

// Schema check for outgoing frames; returns a list of violations.
export function validateFrame(frame: FrameMsg, previousT: number | null): string[] {
  const problems: string[] = [];
  if (!Number.isFinite(frame.t)) problems.push("t is not finite");
  if (previousT !== null && frame.t <= previousT) problems.push("t not increasing");
  if (!isVec(frame.head.p, 3)) problems.push("head.p malformed");
  if (!isVec(frame.head.q, 4) || !isUnit(frame.head.q)) problems.push("head.q not unit");
  if (!isVec(frame.gaze.o, 3)) problems.push("gaze.o malformed");
  if (!isVec(frame.gaze.d, 3) || !isUnit(frame.gaze.d)) problems.push("gaze.d not unit");
  if (!isVec(frame.hand.p, 3)) problems.push("hand.p malformed");
  if (!isVec(frame.hand.q, 4) || !isUnit(frame.hand.q)) problems.push("hand.q not unit");
  if (!isVec(frame.hand.ext, 4) || frame.hand.ext.some((e) => e < 0 || e > 1)) {
    problems.push("hand.ext out of range");
  }
  if (!(frame.hand.gap >= 0)) problems.push("hand.gap negative");
  if (typeof frame.gaze.valid !== "boolean" || typeof frame.hand.valid !== "boolean") {
    problems.push("validity flags missing");
  }
  return problems;
}
