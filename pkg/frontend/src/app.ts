import { HttpApi } from "./api.js";
import { TokenGame } from "./controller.js";
import { renderInvariantPanel, renderScene } from "./dom.js";

function byId<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function redraw(game: TokenGame): void {
  const scene = game.scene();
  const canvas = byId<HTMLElement>("net");
  if (scene) {
    renderScene(canvas, scene, (transition) => {
      void game.clickTransition(transition).then(() => redraw(game));
    });
  } else {
    canvas.replaceChildren();
  }
  renderInvariantPanel(byId<HTMLTableElement>("invariants"), game.rows());

  const banner = byId<HTMLElement>("banner");
  banner.textContent = game.banner() ?? "";
  banner.hidden = game.banner() === null;

  const notice = byId<HTMLElement>("notice");
  notice.textContent = game.notice ?? "";
  notice.hidden = game.notice === null;

  const state = game.state;
  byId<HTMLElement>("history").textContent = state
    ? state.history.length
      ? `history: ${state.history.join(" ")}`
      : "history: (empty)"
    : "";
  byId<HTMLElement>("netname").textContent = state ? state.net : "no net loaded";
}

async function start(): Promise<void> {
  const game = new TokenGame(new HttpApi(""));

  byId<HTMLButtonElement>("undo").addEventListener("click", () => {
    void game.undo().then(() => redraw(game));
  });
  byId<HTMLButtonElement>("reset").addEventListener("click", () => {
    void game.reset().then(() => redraw(game));
  });
  byId<HTMLButtonElement>("load").addEventListener("click", () => {
    const text = byId<HTMLTextAreaElement>("netsource").value;
    void game.loadNet(text).then((error) => {
      game.notice = error;
      redraw(game);
    });
  });

  try {
    await game.init();
  } catch (error) {
    game.notice = `${error instanceof Error ? error.message : error}`;
  }
  redraw(game);
}

void start();
