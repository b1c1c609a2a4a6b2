// Session client: hello once, then one frame per tick; every server
// message is surfaced through callbacks. Interaction semantics stay
// entirely server-side.

import { FrameMsg, parseServerMsg, StateMsg, EventMsg, ErrorMsg } from "./protocol.js";

// The subset of the WebSocket API the client needs; satisfied by the
// browser WebSocket and by the `ws` package in node.
export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
}

export interface SessionCallbacks {
  onState?: (state: StateMsg) => void;
  onEvent?: (event: EventMsg) => void;
  onError?: (error: ErrorMsg) => void;
  onOpen?: () => void;
  onClose?: () => void;
}

export class SessionClient {
  private socket: SocketLike | null = null;
  private lastT: number | null = null;
  connected = false;

  constructor(
    private url: string,
    private callbacks: SessionCallbacks,
    private makeSocket: (url: string) => SocketLike,
  ) {}

  connect(config: Record<string, unknown> = {}): void {
    const socket = this.makeSocket(this.url);
    this.socket = socket;
    socket.onopen = () => {
      this.connected = true;
      socket.send(JSON.stringify({ type: "hello", version: 1, config }));
      this.callbacks.onOpen?.();
    };
    socket.onmessage = (ev) => {
      const msg = parseServerMsg(String(ev.data));
      if (msg.type === "state") this.callbacks.onState?.(msg);
      else if (msg.type === "event") this.callbacks.onEvent?.(msg);
      else this.callbacks.onError?.(msg);
    };
    socket.onclose = () => {
      this.connected = false;
      this.callbacks.onClose?.();
    };
    socket.onerror = () => {
      this.connected = false;
      this.callbacks.onClose?.();
    };
  }

  sendFrame(frame: FrameMsg): void {
    if (!this.socket || !this.connected) return;
    if (this.lastT !== null && frame.t <= this.lastT) {
      throw new Error(`frame timestamps must increase (${frame.t} after ${this.lastT})`);
    }
    this.lastT = frame.t;
    this.socket.send(JSON.stringify(frame));
  }

  close(): void {
    this.socket?.close();
    this.connected = false;
  }
}
