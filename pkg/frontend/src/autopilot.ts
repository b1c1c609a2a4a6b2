// Keys 1/2/3 request a reference frame. The protocol has no mutation
// message, so the switcher operates the UI the way a user would: gaze
// at the top-bar frame toggle and pinch-click until the engine reports
// the requested frame. Only input is synthesized; semantics stay
// server-side.

import { add, rotate, scale, vec3, Vec3 } from "./math.js";
import { FrameOverride } from "./controls.js";
import { StateMsg } from "./protocol.js";

const AIM_TICKS = 6;
const PINCH_TICKS = 4;
const SETTLE_TICKS = 10;

export const FRAME_KEYS: Record<string, string> = {
  "1": "OnHand",
  "2": "AboveHand",
  "3": "HeadReferenced",
};

function elementCenterWorld(state: StateMsg, elementId: string): Vec3 | null {
  const element = state.view_model.elements.find((e) => e.id === elementId);
  if (!element) return null;
  const [umin, vmin, umax, vmax] = element.rect;
  const u = (umin + umax) / 2;
  const v = (vmin + vmax) / 2;
  const [w, x, y, z] = state.ui_pose.q;
  const q = { w, x, y, z };
  const center = vec3(state.ui_pose.p[0], state.ui_pose.p[1], state.ui_pose.p[2]);
  return add(center, add(
    scale(rotate(q, vec3(1, 0, 0)), (u - 0.5) * state.extent[0]),
    scale(rotate(q, vec3(0, 1, 0)), (v - 0.5) * state.extent[1]),
  ));
}

export class FrameSwitcher {
  private desired: string | null = null;
  private phase: "aim" | "pinch" | "settle" = "aim";
  private ticks = 0;

  request(frame: string): void {
    this.desired = frame;
    this.phase = "aim";
    this.ticks = 0;
  }

  get active(): boolean {
    return this.desired !== null;
  }

  // Per tick: the input override to apply, or null when idle.
  update(state: StateMsg | null): FrameOverride | null {
    if (this.desired === null) return null;
    if (state !== null && state.reference_frame === this.desired) {
      this.desired = null;
      return null;
    }
    if (state === null) return { palm: true };
    const target = elementCenterWorld(state, "frame_toggle");
    if (target === null) return { palm: true };
    this.ticks += 1;
    switch (this.phase) {
      case "aim":
        if (this.ticks >= AIM_TICKS) this.advance("pinch");
        return { palm: true, gazeTarget: target, pinch: false };
      case "pinch":
        if (this.ticks >= PINCH_TICKS) this.advance("settle");
        return { palm: true, gazeTarget: target, pinch: true };
      case "settle":
        if (this.ticks >= SETTLE_TICKS) this.advance("aim");
        return { palm: true, gazeTarget: target, pinch: false };
    }
  }

  private advance(phase: "aim" | "pinch" | "settle"): void {
    this.phase = phase;
    this.ticks = 0;
  }
}
