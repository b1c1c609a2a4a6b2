// Pure render model: a state message in, a drawable scene out. The
// canvas layer only rasterizes what this produces, so tests can check
// the rendered element set without a DOM.

import { add, rotate, scale, vec3, Vec3 } from "./math.js";
import { projectToScreen } from "./controls.js";
import { ElementObj, EventMsg, StateMsg } from "./protocol.js";

const KNOWN_KINDS = new Set(["Button", "ListItem", "GridItem", "Region"]);

const KIND_FILL: Record<string, string> = {
  Button: "#3a5f8a",
  ListItem: "#38505f",
  GridItem: "#445c45",
  Region: "#2e2e38",
};

export interface Quad {
  id: string;
  kind: string;
  points: [number, number][]; // 4 screen corners, panel order
  fill: string;
  label: string;
  highlighted: boolean;
}

export interface Scene {
  panel: [number, number][] | null; // projected panel outline
  elements: Quad[];
  badges: string[]; // FSM state, reference frame, app
  banner: string | null; // connection problem, input suspended
  ticker: string[];
  mapWindow: { x0: number; y0: number; x1: number; y1: number } | null;
  warnings: string[];
}

function panelCorners(state: StateMsg, shrink: number): Vec3[] {
  const [px, py, pz] = state.ui_pose.p;
  const [w, x, y, z] = state.ui_pose.q;
  const q = { w, x, y, z };
  const center = vec3(px, py, pz);
  const right = rotate(q, vec3(1, 0, 0));
  const up = rotate(q, vec3(0, 1, 0));
  const [width, height] = state.extent;
  const corners: Vec3[] = [];
  for (const [cu, cv] of [[0, 0], [1, 0], [1, 1], [0, 1]] as const) {
    const u = 0.5 + (cu - 0.5) * shrink;
    const v = 0.5 + (cv - 0.5) * shrink;
    corners.push(add(center,
      add(scale(right, (u - 0.5) * width), scale(up, (v - 0.5) * height))));
  }
  return corners;
}

function rectCorners(state: StateMsg, rect: [number, number, number, number],
                     shrink: number): Vec3[] {
  const [px, py, pz] = state.ui_pose.p;
  const [w, x, y, z] = state.ui_pose.q;
  const q = { w, x, y, z };
  const center = vec3(px, py, pz);
  const right = rotate(q, vec3(1, 0, 0));
  const up = rotate(q, vec3(0, 1, 0));
  const [width, height] = state.extent;
  const [umin, vmin, umax, vmax] = rect;
  const out: Vec3[] = [];
  for (const [u, v] of [[umin, vmin], [umax, vmin], [umax, vmax], [umin, vmax]]) {
    const su = 0.5 + (u - 0.5) * shrink;
    const sv = 0.5 + (v - 0.5) * shrink;
    out.push(add(center,
      add(scale(right, (su - 0.5) * width), scale(up, (sv - 0.5) * height))));
  }
  return out;
}

function project(points: Vec3[], w: number, h: number): [number, number][] | null {
  const projected: [number, number][] = [];
  for (const p of points) {
    const s = projectToScreen(p, w, h);
    if (s === null) return null;
    projected.push(s);
  }
  return projected;
}

export function describeEvent(event: EventMsg): string {
  const t = (event.t as number).toFixed(3);
  switch (event.event) {
    case "Selected":
      return `${t} Selected ${event.target}`;
    case "HoverChanged":
      return `${t} Hover ${event.old ?? "-"} → ${event.new ?? "-"}`;
    case "DragUpdated": {
      const d = event.delta as number[];
      return `${t} Drag (${d.map((c) => c.toFixed(3)).join(", ")})`;
    }
    case "DragEnded":
      return `${t} DragEnded committed=${event.committed}`;
    default:
      return `${t} ${event.event}`;
  }
}

export function buildScene(
  state: StateMsg | null,
  recentEvents: EventMsg[],
  screenW: number,
  screenH: number,
  connected: boolean,
): Scene {
  const scene: Scene = {
    panel: null,
    elements: [],
    badges: [],
    banner: connected ? null : "disconnected — input suspended",
    ticker: recentEvents.slice(-6).map(describeEvent),
    mapWindow: null,
    warnings: [],
  };
  if (state === null) {
    scene.badges = ["connecting"];
    return scene;
  }
  scene.badges = [
    `state: ${state.fsm}`,
    `frame: ${state.reference_frame}`,
    `app: ${state.view_model.app_id}`,
  ];
  if (state.fsm === "UiOff") {
    scene.badges[0] = "state: UI Off";
    return scene;
  }
  // the summon animation scales the panel up with the reported progress
  const shrink = state.fsm === "Summoning" ? 0.2 + 0.8 * (state.summon_progress ?? 0) : 1;
  scene.panel = project(panelCorners(state, shrink), screenW, screenH);
  if (scene.panel === null) return scene;

  for (const element of state.view_model.elements) {
    const points = project(rectCorners(state, element.rect, shrink), screenW, screenH);
    if (points === null) continue;
    let kind = element.kind;
    if (!KNOWN_KINDS.has(kind)) {
      scene.warnings.push(`unknown element kind ${kind} (${element.id})`);
      kind = "generic";
    }
    scene.elements.push({
      id: element.id,
      kind,
      points,
      fill: KIND_FILL[kind] ?? "#555555",
      label: element.label,
      highlighted: state.hover === element.id,
    });
  }
  const map = state.view_model.map;
  if (map !== null) {
    const aspect = state.extent[1] / state.extent[0];
    scene.mapWindow = {
      x0: map.center[0] - map.scale / 2,
      x1: map.center[0] + map.scale / 2,
      y0: map.center[1] - (map.scale * aspect) / 2,
      y1: map.center[1] + (map.scale * aspect) / 2,
    };
  }
  return scene;
}
