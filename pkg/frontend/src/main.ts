// Browser entry: canvas rendering plus input capture. All interaction
// logic lives server-side; this file only forwards input frames and
// draws the latest state.

import { ControlMapping, InputState } from "./controls.js";
import { FrameSwitcher, FRAME_KEYS } from "./autopilot.js";
import { SessionClient } from "./client.js";
import { buildScene, Scene } from "./scene.js";
import { EventMsg, StateMsg } from "./protocol.js";
import { validateFrame } from "./protocol.js";

const FRAME_RATE = 45; // client input rate, comfortably above 30 Hz

const canvas = document.getElementById("view") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;

function resize(): void {
  canvas.width = window.innerWidth;
  canvas.height = window.innerHeight;
}
resize();
window.addEventListener("resize", resize);

const input: InputState = {
  mouseX: canvas.width / 2,
  mouseY: canvas.height / 2,
  palmHeld: false,
  pinchHeld: false,
  shiftHeld: false,
};
const controls = new ControlMapping(canvas.width, canvas.height);
const switcher = new FrameSwitcher();

let lastState: StateMsg | null = null;
let recentEvents: EventMsg[] = [];
let lastError: string | null = null;

const url = `ws://${window.location.hostname || "127.0.0.1"}:8000/session`;
const client = new SessionClient(
  url,
  {
    onState: (state) => {
      lastState = state;
    },
    onEvent: (event) => {
      recentEvents.push(event);
      recentEvents = recentEvents.slice(-20);
    },
    onError: (error) => {
      lastError = error.message;
    },
  },
  (u) => new WebSocket(u) as never,
);
client.connect({});

canvas.addEventListener("mousemove", (ev) => {
  input.mouseX = ev.clientX;
  input.mouseY = ev.clientY;
  controls.dragMove(ev.clientX, ev.clientY, input);
});
canvas.addEventListener("mousedown", (ev) => {
  input.pinchHeld = true;
  controls.dragStart(ev.clientX, ev.clientY);
});
window.addEventListener("mouseup", () => {
  input.pinchHeld = false;
  controls.dragEnd();
});
canvas.addEventListener("wheel", (ev) => {
  controls.wheel(ev.deltaY);
  ev.preventDefault();
});
window.addEventListener("keydown", (ev) => {
  if (ev.key === "h" || ev.key === "H") input.palmHeld = true;
  if (ev.key === "Shift") input.shiftHeld = true;
  const frame = FRAME_KEYS[ev.key];
  if (frame) switcher.request(frame);
});
window.addEventListener("keyup", (ev) => {
  if (ev.key === "h" || ev.key === "H") input.palmHeld = false;
  if (ev.key === "Shift") input.shiftHeld = false;
});

let tick = 0;
let lastT: number | null = null;
setInterval(() => {
  if (!client.connected) return;
  controls.screenW = canvas.width;
  controls.screenH = canvas.height;
  const override = switcher.update(lastState);
  const frame = controls.buildFrame(tick / FRAME_RATE, input, override ?? undefined);
  const problems = validateFrame(frame, lastT);
  if (problems.length > 0) {
    console.warn("dropping invalid frame:", problems);
    return;
  }
  lastT = frame.t;
  tick += 1;
  client.sendFrame(frame);
}, 1000 / FRAME_RATE);

function drawQuad(points: [number, number][], fill: string, stroke?: string): void {
  ctx.beginPath();
  ctx.moveTo(points[0][0], points[0][1]);
  for (const [x, y] of points.slice(1)) ctx.lineTo(x, y);
  ctx.closePath();
  ctx.fillStyle = fill;
  ctx.fill();
  if (stroke) {
    ctx.strokeStyle = stroke;
    ctx.lineWidth = 2;
    ctx.stroke();
  }
}

function draw(scene: Scene): void {
  ctx.fillStyle = "#15161a";
  ctx.fillRect(0, 0, canvas.width, canvas.height);

  if (scene.panel) {
    drawQuad(scene.panel, "#20242c", "#3c4250");
  }
  for (const quad of scene.elements) {
    drawQuad(quad.points, quad.fill, quad.highlighted ? "#ffd24d" : undefined);
    if (quad.label) {
      const cx = (quad.points[0][0] + quad.points[2][0]) / 2;
      const cy = (quad.points[0][1] + quad.points[2][1]) / 2;
      ctx.fillStyle = "#e8e8ee";
      ctx.font = "12px sans-serif";
      ctx.textAlign = "center";
      ctx.fillText(quad.label, cx, cy);
    }
  }
  for (const warning of scene.warnings) console.warn(warning);

  ctx.textAlign = "left";
  ctx.font = "14px monospace";
  ctx.fillStyle = "#9fd49f";
  scene.badges.forEach((badge, i) => ctx.fillText(badge, 12, 22 + i * 18));

  ctx.fillStyle = "#8a93a6";
  ctx.font = "12px monospace";
  scene.ticker.forEach((line, i) => {
    ctx.fillText(line, 12, canvas.height - 12 - (scene.ticker.length - 1 - i) * 16);
  });

  if (scene.mapWindow) {
    // minimap inset: visible window within the unit content square
    const size = 90;
    const x0 = canvas.width - size - 14;
    const y0 = 14;
    ctx.strokeStyle = "#5b6373";
    ctx.strokeRect(x0, y0, size, size);
    const w = scene.mapWindow;
    ctx.strokeStyle = "#ffd24d";
    ctx.strokeRect(
      x0 + w.x0 * size,
      y0 + (1 - w.y1) * size,
      (w.x1 - w.x0) * size,
      (w.y1 - w.y0) * size,
    );
  }

  if (scene.banner || lastError) {
    ctx.fillStyle = "#b33a3a";
    ctx.fillRect(0, 0, canvas.width, 34);
    ctx.fillStyle = "#ffffff";
    ctx.font = "14px sans-serif";
    ctx.fillText(scene.banner ?? `protocol error: ${lastError}`, 12, 22);
  }

  ctx.fillStyle = "#6d7486";
  ctx.font = "12px sans-serif";
  ctx.fillText(
    "H: palm open   mouse: gaze   button: pinch   drag: move hand   " +
    "wheel / shift-drag: depth   1/2/3: reference frame",
    12, 40,
  );
}

function renderLoop(): void {
  draw(buildScene(lastState, recentEvents, canvas.width, canvas.height, client.connected));
  requestAnimationFrame(renderLoop);
}
renderLoop();
