// The game board: SVG rendering of the arena plus all interaction.
//
// Board vertices are the arena union the faded removed vertices; while the
// splitter is to move, the highlighted set equals the server's ball and
// moves outside it render grayed (dominated: deleting them changes
// nothing). Hovering a splitter option fetches the what-if rank and shows a
// "progressing" badge when the reply strictly lowers the ball's rank.

import { ApiError, PlayClient } from "./api";
import { ballWithin } from "./graphs";
import { computeLayout, type Point } from "./layout";
import type { GameState, GraphJson, Role, WhatIfResponse } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface BoardOptions {
  width?: number;
  height?: number;
  layoutSeed?: number;
}

export class Board {
  readonly client: PlayClient;
  readonly graph: GraphJson;
  readonly radius: number;
  readonly role: Role;
  readonly layout: Point[];

  gameId = "";
  state!: GameState;
  whatIfCache = new Map<number, WhatIfResponse>();
  busy = false;

  private svg: SVGSVGElement;
  private statusLine: HTMLElement;
  private banner: HTMLElement;
  private badge: HTMLElement;
  private circles: SVGCircleElement[] = [];
  private labels: SVGTextElement[] = [];
  private edgeLines: { u: number; v: number; line: SVGLineElement }[] = [];

  constructor(
    container: HTMLElement,
    client: PlayClient,
    graph: GraphJson,
    radius: number,
    role: Role,
    options: BoardOptions = {},
  ) {
    this.client = client;
    this.graph = graph;
    this.radius = radius;
    this.role = role;
    const width = options.width ?? 640;
    const height = options.height ?? 420;
    this.layout = computeLayout(graph, width, height, options.layoutSeed ?? 1);

    container.innerHTML = "";
    this.banner = el("div", "banner");
    this.statusLine = el("div", "status");
    this.badge = el("div", "whatif-badge hidden");
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("width", String(width));
    svg.setAttribute("height", String(height));
    svg.setAttribute("class", "board");
    this.svg = svg;
    container.append(this.banner, this.statusLine, svg, this.badge);
    this.renderGraphSkeleton();
  }

  // -- lifecycle ---------------------------------------------------------------

  async start(): Promise<void> {
    const created = await this.client.createGame(this.graph, this.radius, this.role);
    this.gameId = created.game_id;
    this.applyState(created.state);
  }

  applyState(state: GameState): void {
    this.state = state;
    this.whatIfCache.clear();
    this.hideBadge();
    this.refresh();
  }

  // -- derived sets used by rendering and by the tests ---------------------------

  arenaSet(): Set<number> {
    return new Set(this.state.arena);
  }

  /** Highlighted set: the server's ball while the splitter is to move. */
  highlightedBall(): Set<number> {
    if (this.state.phase === "awaiting_splitter" && this.state.ball) {
      return new Set(this.state.ball);
    }
    return new Set();
  }

  removedSet(): Set<number> {
    const arena = this.arenaSet();
    const removed = new Set<number>();
    for (let v = 0; v < this.graph.n; v++) if (!arena.has(v)) removed.add(v);
    return removed;
  }

  isHumansTurn(): boolean {
    if (this.state.finished) return false;
    return this.role === "connector"
      ? this.state.phase === "awaiting_connector"
      : this.state.phase === "awaiting_splitter";
  }

  /** Client-side legality mirror: arena membership in the human's phase. */
  isLegal(v: number): boolean {
    return this.isHumansTurn() && this.arenaSet().has(v);
  }

  /** The ball the arena will shrink to if the human connector plays v. */
  previewBall(v: number): Set<number> {
    return ballWithin(this.graph, this.arenaSet(), v, this.radius);
  }

  // -- interaction ---------------------------------------------------------------

  async clickVertex(v: number): Promise<void> {
    if (this.busy || !this.isLegal(v)) {
      if (!this.busy) this.toast("that vertex cannot be played now");
      return;
    }
    this.busy = true;
    this.refresh();
    try {
      const result = await this.client.move(this.gameId, v);
      this.applyState(result.state);
      if (result.engine_reply !== null) {
        this.flashEngineReply(result.engine_reply);
      }
    } catch (err) {
      if (err instanceof ApiError) {
        this.toast(`rejected: ${err.code}`);
      } else {
        this.toast("server unreachable");
      }
    } finally {
      this.busy = false;
      this.refresh();
    }
  }

  async hoverVertex(v: number): Promise<WhatIfResponse | null> {
    if (this.state.phase !== "awaiting_splitter" || !this.arenaSet().has(v)) {
      return null;
    }
    const cached = this.whatIfCache.get(v);
    if (cached) {
      this.showBadge(v, cached);
      return cached;
    }
    try {
      const hint = await this.client.whatIf(this.gameId, v);
      this.whatIfCache.set(v, hint);
      this.showBadge(v, hint);
      return hint;
    } catch (err) {
      if (err instanceof ApiError && err.code === "analysis_disabled") {
        this.showBadgeText(v, "n/a");
        return null;
      }
      throw err;
    }
  }

  leaveVertex(): void {
    this.hideBadge();
  }

  // -- rendering -------------------------------------------------------------------

  private renderGraphSkeleton(): void {
    for (const [u, v] of this.graph.edges) {
      const line = document.createElementNS(SVG_NS, "line");
      line.setAttribute("x1", String(this.layout[u].x));
      line.setAttribute("y1", String(this.layout[u].y));
      line.setAttribute("x2", String(this.layout[v].x));
      line.setAttribute("y2", String(this.layout[v].y));
      line.setAttribute("class", "edge");
      this.svg.appendChild(line);
      this.edgeLines.push({ u, v, line });
    }
    for (let v = 0; v < this.graph.n; v++) {
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(this.layout[v].x));
      circle.setAttribute("cy", String(this.layout[v].y));
      circle.setAttribute("r", "14");
      circle.setAttribute("class", "vertex");
      circle.dataset.vertex = String(v);
      circle.addEventListener("click", () => void this.clickVertex(v));
      circle.addEventListener("mouseenter", () => void this.hoverVertex(v));
      circle.addEventListener("mouseleave", () => this.leaveVertex());
      this.svg.appendChild(circle);
      this.circles.push(circle);

      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(this.layout[v].x));
      label.setAttribute("y", String(this.layout[v].y + 4));
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("class", "vertex-label");
      label.textContent = String(v);
      this.svg.appendChild(label);
      this.labels.push(label);
    }
  }

  refresh(): void {
    const arena = this.arenaSet();
    const ball = this.highlightedBall();
    const splitterPhase = this.state.phase === "awaiting_splitter";
    for (let v = 0; v < this.graph.n; v++) {
      const classes = ["vertex"];
      if (!arena.has(v)) classes.push("removed");
      if (ball.has(v)) classes.push("ball");
      if (splitterPhase && arena.has(v) && !ball.has(v)) classes.push("dominated");
      if (this.state.pending_connector === v) classes.push("pending");
      this.circles[v].setAttribute("class", classes.join(" "));
      this.labels[v].setAttribute(
        "class",
        arena.has(v) ? "vertex-label" : "vertex-label removed",
      );
    }
    for (const { u, v, line } of this.edgeLines) {
      line.setAttribute(
        "class",
        arena.has(u) && arena.has(v) ? "edge" : "edge removed",
      );
    }
    this.renderStatus();
  }

  private renderStatus(): void {
    const s = this.state;
    if (s.finished) {
      this.statusLine.textContent =
        `splitter wins after round ${s.winner_round} ` +
        `(promised within ${s.initial_rank})`;
      this.statusLine.dataset.phase = "finished";
      return;
    }
    const seat = this.isHumansTurn() ? "your move" : "engine thinking";
    const who = s.phase === "awaiting_connector" ? "connector" : "splitter";
    this.statusLine.textContent =
      `round ${s.round} | splitter can win in <= ${s.initial_rank} rounds | ` +
      `${who} to move (${seat})${this.busy ? " ..." : ""}`;
    this.statusLine.dataset.phase = s.phase;
  }

  private flashEngineReply(v: number): void {
    const circle = this.circles[v];
    circle.classList.add("engine-reply");
    setTimeout(() => circle.classList.remove("engine-reply"), 900);
  }

  private showBadge(v: number, hint: WhatIfResponse): void {
    this.showBadgeText(
      v,
      hint.progressing
        ? `rank ${hint.resulting_rank} (progressing)`
        : `rank ${hint.resulting_rank}`,
      hint.progressing,
    );
  }

  private showBadgeText(v: number, text: string, progressing = false): void {
    this.badge.textContent = text;
    this.badge.className = progressing ? "whatif-badge progressing" : "whatif-badge";
    this.badge.dataset.vertex = String(v);
    this.badge.style.left = `${this.layout[v].x + 18}px`;
    this.badge.style.top = `${this.layout[v].y - 10}px`;
  }

  private hideBadge(): void {
    this.badge.className = "whatif-badge hidden";
    delete this.badge.dataset.vertex;
  }

  private toast(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.add("visible");
    setTimeout(() => this.banner.classList.remove("visible"), 1500);
  }

  // Test hooks: the DOM is the source of truth the assertions read back.
  vertexClasses(v: number): string[] {
    return (this.circles[v].getAttribute("class") ?? "").split(" ").filter(Boolean);
  }

  badgeState(): { text: string; progressing: boolean; hidden: boolean } {
    return {
      text: this.badge.textContent ?? "",
      progressing: this.badge.classList.contains("progressing"),
      hidden: this.badge.classList.contains("hidden"),
    };
  }

  statusText(): string {
    return this.statusLine.textContent ?? "";
  }
}

function el(tag: string, className: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  return node;
}
