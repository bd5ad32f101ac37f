import { HttpApi } from "./api.js";
import { TokenGame } from "./controller.js";
import { renderInvariantPanel, renderScene } from "./dom.js";
function byId(id) {
    return document.getElementById(id);
}
function redraw(game) {
    const scene = game.scene();
    const canvas = byId("net");
    if (scene) {
        renderScene(canvas, scene, (transition) => {
            void game.clickTransition(transition).then(() => redraw(game));
        });
    }
    else {
        canvas.replaceChildren();
    }
    renderInvariantPanel(byId("invariants"), game.rows());
    const banner = byId("banner");
    banner.textContent = game.banner() ?? "";
    banner.hidden = game.banner() === null;
    const notice = byId("notice");
    notice.textContent = game.notice ?? "";
    notice.hidden = game.notice === null;
    const state = game.state;
    byId("history").textContent = state
        ? state.history.length
            ? `history: ${state.history.join(" ")}`
            : "history: (empty)"
        : "";
    byId("netname").textContent = state ? state.net : "no net loaded";
}
async function start() {
    const game = new TokenGame(new HttpApi(""));
    byId("undo").addEventListener("click", () => {
        void game.undo().then(() => redraw(game));
    });
    byId("reset").addEventListener("click", () => {
        void game.reset().then(() => redraw(game));
    });
    byId("load").addEventListener("click", () => {
        const text = byId("netsource").value;
        void game.loadNet(text).then((error) => {
            game.notice = error;
            redraw(game);
        });
    });
    try {
        await game.init();
    }
    catch (error) {
        game.notice = `${error instanceof Error ? error.message : error}`;
    }
    redraw(game);
}
void start();
