// Page wiring. One active session per tab; every mutation is a round
// trip through the HTTP API and the redraw always reads the store.

import { ApiClient, type MoveKind } from "./api.js";
import { PRESETS, presetById } from "./presets.js";
import { renderBoard } from "./render.js";
import { BoardStore, unwinnableBanner } from "./state.js";

function must<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const api = new ApiClient("");
const store = new BoardStore(api);

const presetSelect = must<HTMLSelectElement>("preset");
const newGameBtn = must<HTMLButtonElement>("new-game");
const hintBtn = must<HTMLButtonElement>("hint-btn");
const statusLine = must<HTMLDivElement>("status");
const wonBanner = must<HTMLDivElement>("won-banner");
const hintBanner = must<HTMLDivElement>("hint-banner");
const errorBar = must<HTMLDivElement>("error-bar");
const errorText = must<HTMLSpanElement>("error-text");
const retryBtn = must<HTMLButtonElement>("retry");
const historyList = must<HTMLOListElement>("history");
const board = document.getElementById("board") as unknown as SVGSVGElement;
const popover = must<HTMLDivElement>("popover");
const popoverTitle = must<HTMLDivElement>("popover-title");
const popLend = must<HTMLButtonElement>("pop-lend");
const popBorrow = must<HTMLButtonElement>("pop-borrow");

let popoverVertex: string | null = null;

for (const preset of PRESETS) {
  const option = document.createElement("option");
  option.value = preset.id;
  option.textContent = preset.label;
  presetSelect.appendChild(option);
}

function closePopover(): void {
  popoverVertex = null;
  popover.classList.add("hidden");
}

function openPopover(vertex: string, ev: MouseEvent): void {
  popoverVertex = vertex;
  popoverTitle.textContent = vertex;
  popover.classList.remove("hidden");
  const pad = 8;
  const w = popover.offsetWidth || 160;
  const h = popover.offsetHeight || 90;
  popover.style.left = `${Math.min(ev.clientX + pad, window.innerWidth - w - pad)}px`;
  popover.style.top = `${Math.min(ev.clientY + pad, window.innerHeight - h - pad)}px`;
}

function play(vertex: string, kind: MoveKind): void {
  closePopover();
  void store.playMove(vertex, kind);
}

function onVertexClick(vertex: string, ev: MouseEvent): void {
  ev.stopPropagation();
  // shortcuts for mouse users; plain click or tap opens the menu
  if (ev.shiftKey) play(vertex, "lend");
  else if (ev.altKey) play(vertex, "borrow");
  else openPopover(vertex, ev);
}

function render(): void {
  const { session, pending, stale, lastError, lastHint, loading } = store.current;

  newGameBtn.disabled = loading;
  hintBtn.disabled = session === null || pending !== null || stale;

  if (session === null) {
    statusLine.textContent = loading ? "starting session..." : "pick a board and press New game";
    board.replaceChildren();
    wonBanner.classList.add("hidden");
    hintBanner.classList.add("hidden");
  } else {
    const busy = pending !== null ? " (applying move...)" : "";
    statusLine.textContent =
      `dollars N = ${session.total}   genus g = ${session.genus}${busy}`;
    wonBanner.classList.toggle("hidden", !session.won);
    if (lastHint === null) {
      hintBanner.classList.add("hidden");
    } else {
      hintBanner.classList.remove("hidden");
      hintBanner.classList.toggle("bad", !lastHint.winnable);
      if (!lastHint.winnable) {
        hintBanner.textContent = unwinnableBanner();
      } else if (lastHint.suggested_move) {
        const [v, kind] = lastHint.suggested_move;
        hintBanner.textContent = `winnable (rank ${lastHint.rank}); try: ${kind} at ${v}`;
      } else {
        hintBanner.textContent = `winnable (rank ${lastHint.rank}); nothing left to do`;
      }
    }
    renderBoard(board, session.graph, session.config, {
      highlighted: lastHint?.suggested_move?.[0] ?? null,
      disabled: pending !== null || stale || loading,
      onVertexClick,
    });
  }

  errorBar.classList.toggle("hidden", lastError === null);
  errorText.textContent = lastError ?? "";
  retryBtn.classList.toggle("hidden", !stale);

  historyList.replaceChildren();
  for (const [vertex, kind] of session?.log ?? []) {
    const item = document.createElement("li");
    item.textContent = `${kind} at ${vertex}`;
    historyList.appendChild(item);
  }
}

newGameBtn.addEventListener("click", () => {
  closePopover();
  const preset = presetById(presetSelect.value);
  store.newGame(preset.graph, preset.start).catch(() => {
    // the store already recorded the error; render() shows it
  });
});

hintBtn.addEventListener("click", () => {
  void store.requestHint();
});

retryBtn.addEventListener("click", () => {
  void store.resync();
});

popLend.addEventListener("click", () => {
  if (popoverVertex !== null) play(popoverVertex, "lend");
});
popBorrow.addEventListener("click", () => {
  if (popoverVertex !== null) play(popoverVertex, "borrow");
});

document.addEventListener("click", (ev) => {
  if (!popover.contains(ev.target as Node)) closePopover();
});
document.addEventListener("keydown", (ev) => {
  if (ev.key === "Escape") closePopover();
});

store.subscribe(render);
render();
