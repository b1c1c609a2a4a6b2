// Desktop stand-in for the headset sensors: the mouse is the gaze, H
// holds the palm open, the mouse button pinches, dragging while
// pinching moves the hand in the panel plane, the wheel (or a
// shift-drag) moves it in depth.

import { add, billboardToward, normalize, scale, sub, vec3, Vec3 } from "./math.js";
import { FrameMsg } from "./protocol.js";

export const HEAD_POS: Vec3 = vec3(0, 1.6, 0);
export const HAND_BASE: Vec3 = vec3(0.02, 1.6, -0.42);
const FOV_Y = (60 * Math.PI) / 180;

const HAND_RANGE = 0.35; // m of hand travel in each direction
const WHEEL_METERS = 1e-4; // hand depth per wheel delta unit
const DRAG_METERS_PER_PX = 9e-4;

export interface InputState {
  mouseX: number;
  mouseY: number;
  palmHeld: boolean; // key H
  pinchHeld: boolean; // mouse button
  shiftHeld: boolean; // shift-drag moves in depth instead
}

export interface FrameOverride {
  gazeTarget?: Vec3; // world point to look at instead of the mouse
  pinch?: boolean;
  palm?: boolean;
}

export function focalLength(screenH: number): number {
  return screenH / 2 / Math.tan(FOV_Y / 2);
}

// Screen pixel of a world point for the fixed camera at the head,
// looking down -Z. Returns null behind the camera.
export function projectToScreen(
  world: Vec3, screenW: number, screenH: number,
): [number, number] | null {
  const d = sub(world, HEAD_POS);
  const depth = -d.z;
  if (depth <= 1e-6) return null;
  const f = focalLength(screenH);
  return [screenW / 2 + (f * d.x) / depth, screenH / 2 - (f * d.y) / depth];
}

export function gazeDirFromMouse(
  mouseX: number, mouseY: number, screenW: number, screenH: number,
): Vec3 {
  const f = focalLength(screenH);
  return normalize(vec3((mouseX - screenW / 2) / f, -(mouseY - screenH / 2) / f, -1));
}

const clamp = (v: number, lo: number, hi: number) => Math.min(hi, Math.max(lo, v));

export class ControlMapping {
  private handOffset: Vec3 = vec3(0, 0, 0);
  private lastDrag: [number, number] | null = null;

  constructor(public screenW: number, public screenH: number) {}

  wheel(deltaY: number): void {
    // wheel up (negative deltaY) pushes the hand forward
    this.moveHand(0, 0, -deltaY * WHEEL_METERS);
  }

  dragStart(x: number, y: number): void {
    this.lastDrag = [x, y];
  }

  dragMove(x: number, y: number, input: InputState): void {
    if (!this.lastDrag || !input.pinchHeld) {
      this.lastDrag = [x, y];
      return;
    }
    const dx = (x - this.lastDrag[0]) * DRAG_METERS_PER_PX;
    const dy = (y - this.lastDrag[1]) * DRAG_METERS_PER_PX;
    this.lastDrag = [x, y];
    if (input.shiftHeld) {
      this.moveHand(0, 0, -dy); // dragging up pushes forward
    } else {
      this.moveHand(dx, -dy, 0); // screen y grows downward
    }
  }

  dragEnd(): void {
    this.lastDrag = null;
  }

  private moveHand(dx: number, dy: number, dz: number): void {
    this.handOffset = vec3(
      clamp(this.handOffset.x + dx, -HAND_RANGE, HAND_RANGE),
      clamp(this.handOffset.y + dy, -HAND_RANGE, HAND_RANGE),
      clamp(this.handOffset.z + dz, -HAND_RANGE, HAND_RANGE),
    );
  }

  handPosition(): Vec3 {
    // depth offset moves along the viewing axis (forward = -Z)
    return add(HAND_BASE, vec3(this.handOffset.x, this.handOffset.y, -this.handOffset.z));
  }

  buildFrame(t: number, input: InputState, override?: FrameOverride): FrameMsg {
    const hand = this.handPosition();
    const palmQ = billboardToward(hand, HEAD_POS);
    const gazeDir = override?.gazeTarget !== undefined
      ? normalize(sub(override.gazeTarget, HEAD_POS))
      : gazeDirFromMouse(input.mouseX, input.mouseY, this.screenW, this.screenH);
    const palmOpen = override?.palm ?? input.palmHeld;
    const pinch = override?.pinch ?? input.pinchHeld;
    const ext = palmOpen ? 0.95 : 0.05;
    return {
      type: "frame",
      t,
      head: { p: [HEAD_POS.x, HEAD_POS.y, HEAD_POS.z], q: [1, 0, 0, 0] },
      gaze: {
        o: [HEAD_POS.x, HEAD_POS.y, HEAD_POS.z],
        d: [gazeDir.x, gazeDir.y, gazeDir.z],
        valid: true,
      },
      hand: {
        p: [hand.x, hand.y, hand.z],
        q: [palmQ.w, palmQ.x, palmQ.y, palmQ.z],
        ext: [ext, ext, ext, ext],
        gap: pinch ? 0.01 : 0.05,
        valid: true,
      },
    };
  }
}
