// Page shell: the new-game panel (graph, radius, seat) and board mounting.

import { PlayClient } from "./api";
import { Board } from "./board";
import { GRAPH_CHOICES } from "./graphs";
import type { Role } from "./types";

export class App {
  readonly root: HTMLElement;
  readonly client: PlayClient;
  board: Board | null = null;

  private boardHost: HTMLElement;

  constructor(root: HTMLElement, client: PlayClient = new PlayClient()) {
    this.root = root;
    this.client = client;
    root.innerHTML = "";

    const panel = document.createElement("form");
    panel.className = "new-game";
    panel.innerHTML = `
      <label>graph
        <select name="graph">
          ${GRAPH_CHOICES.map((c) => `<option value="${c.id}">${c.label}</option>`).join("")}
        </select>
      </label>
      <label>radius
        <select name="radius">
          <option>1</option><option>2</option><option>3</option>
        </select>
      </label>
      <label>play as
        <select name="role">
          <option value="connector">connector</option>
          <option value="splitter">splitter</option>
        </select>
      </label>
      <button type="submit">start game</button>
    `;
    panel.addEventListener("submit", (event) => {
      event.preventDefault();
      const data = new FormData(panel);
      void this.startGame(
        String(data.get("graph")),
        Number(data.get("radius")),
        String(data.get("role")) as Role,
      );
    });

    this.boardHost = document.createElement("div");
    this.boardHost.className = "board-host";
    root.append(panel, this.boardHost);
  }

  async startGame(graphId: string, radius: number, role: Role): Promise<Board> {
    const choice = GRAPH_CHOICES.find((c) => c.id === graphId);
    if (!choice) throw new Error(`unknown graph choice ${graphId}`);
    const board = new Board(this.boardHost, this.client, choice.graph, radius, role);
    try {
      await board.start();
    } catch {
      this.boardHost.insertAdjacentHTML(
        "afterbegin",
        '<div class="banner visible" data-kind="error">could not reach the server, retry</div>',
      );
      throw new Error("server unreachable");
    }
    this.board = board;
    return board;
  }
}
