// DOM assembly and the render/animation loop.

import { ApiClient } from "./api.js";
import { drawConfigSpace, drawLinkage, fitTransform } from "./render.js";
import { infinityMarkerPoints } from "./render.js";
import { LinkageStore } from "./state.js";
import type { Lengths } from "./types.js";
import { BAR_NAMES } from "./validate.js";

type Attrs = Record<string, string | number | boolean | ((e: Event) => void)>;

function el(tag: string, attrs: Attrs = {}, ...children: (string | Node)[]): HTMLElement {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) {
    if (k.startsWith("on") && typeof v === "function") {
      node.addEventListener(k.slice(2).toLowerCase(), v as EventListener);
    } else if (k === "className") {
      node.className = String(v);
    } else {
      node.setAttribute(k, String(v));
    }
  }
  for (const c of children) node.append(c);
  return node;
}

const PRESETS: { name: string; lengths: Lengths }[] = [
  { name: "rhombus", lengths: [1, 1, 1, 1] },
  { name: "isogram", lengths: [2, 1, 2, 1] },
  { name: "deltoid II", lengths: [2, 2, 1, 1] },
  { name: "conic I", lengths: [2, 3, 2, 1] },
  { name: "elliptic", lengths: [2, 3, 4, 6] },
];

export class App {
  store: LinkageStore;
  private root: HTMLElement;
  private linkageCanvas: HTMLCanvasElement;
  private configCanvas: HTMLCanvasElement;
  private classBadge: HTMLElement;
  private grashofBadge: HTMLElement;
  private statusLine: HTMLElement;
  private offlineBanner: HTMLElement;
  private branchSelect: HTMLSelectElement;
  private paramSlider: HTMLInputElement;
  private playButton: HTMLElement;
  private snapBadge: HTMLElement;
  private sliders: HTMLInputElement[] = [];
  private numbers: HTMLInputElement[] = [];
  private lastFrame = 0;

  constructor(root: HTMLElement, baseUrl = "") {
    this.root = root;
    this.store = new LinkageStore(new ApiClient(baseUrl), [2, 1, 2, 1]);
    this.linkageCanvas = el("canvas", { width: 560, height: 420 }) as HTMLCanvasElement;
    this.configCanvas = el("canvas", { width: 360, height: 360 }) as HTMLCanvasElement;
    this.classBadge = el("span", { className: "badge" }, "-");
    this.grashofBadge = el("span", { className: "badge" }, "-");
    this.snapBadge = el("span", { className: "badge snap hidden" }, "snap");
    this.statusLine = el("div", { className: "status" });
    this.offlineBanner = el("div", { className: "banner hidden" }, "service unreachable - retrying on next change");
    this.branchSelect = el("select", {
      onChange: () => void this.store.selectBranch(Number(this.branchSelect.value)),
    }) as HTMLSelectElement;
    this.paramSlider = el("input", {
      type: "range", min: 0, max: 0.999, step: 0.001, value: 0,
      onInput: () => this.store.setParam(Number(this.paramSlider.value)),
    }) as HTMLInputElement;
    this.playButton = el("button", {
      onClick: () => this.store.setPlaying(!this.store.state.playing),
    }, "play");
    this.build();
    this.store.subscribe(() => this.sync());
    void this.store.refresh();
    requestAnimationFrame((t) => this.frame(t));
  }

  private build(): void {
    const lengthRows = BAR_NAMES.map((name, i) => {
      const slider = el("input", {
        type: "range", min: 0.1, max: 6, step: 0.05,
        value: this.store.state.lengths[i]!,
        onInput: (e) => this.store.setLength(i, Number((e.target as HTMLInputElement).value)),
      }) as HTMLInputElement;
      const num = el("input", {
        type: "number", min: 0.05, step: 0.05,
        value: this.store.state.lengths[i]!,
        onChange: (e) => this.store.setLength(i, Number((e.target as HTMLInputElement).value)),
      }) as HTMLInputElement;
      this.sliders.push(slider);
      this.numbers.push(num);
      return el("label", { className: "length-row" }, name, slider, num);
    });
    const overlays = (["diagonals", "configCurve", "infinityMarkers"] as const).map((name) =>
      el(
        "label",
        { className: "overlay" },
        el("input", {
          type: "checkbox",
          checked: true,
          onChange: () => this.store.toggleOverlay(name),
        }),
        name,
      ),
    );
    this.root.append(
      this.offlineBanner,
      el(
        "div",
        { className: "layout" },
        el(
          "div",
          { className: "controls" },
          el("h1", {}, "fourbar explorer"),
          el("div", { className: "badges" }, this.classBadge, this.grashofBadge, this.snapBadge),
          ...lengthRows,
          el(
            "div",
            { className: "presets" },
            ...PRESETS.map((p) =>
              el("button", { onClick: () => this.store.setLengths(p.lengths) }, p.name),
            ),
          ),
          el(
            "div",
            { className: "transforms" },
            el("button", { onClick: () => this.store.applyConjugate() }, "conjugate"),
            ...[1, 2, 3, 4].map((v) =>
              el("button", { onClick: () => void this.store.applyStripSwitch(v) }, `strip ${v}`),
            ),
          ),
          el("div", { className: "branch-row" }, "branch ", this.branchSelect),
          el("div", { className: "param-row" }, this.playButton, this.paramSlider),
          el("div", { className: "overlays" }, ...overlays),
          this.statusLine,
        ),
        el("div", { className: "panels" }, this.linkageCanvas, this.configCanvas),
      ),
    );
  }

  private sync(): void {
    const s = this.store.state;
    this.classBadge.textContent = s.report
      ? `${s.report.class}${s.report.orthodiagonal ? " (orthodiagonal)" : ""}`
      : "-";
    this.grashofBadge.textContent = s.report
      ? s.report.grashof
        ? "grashof"
        : "non-grashof"
      : "-";
    this.grashofBadge.className = `badge ${s.report?.grashof ? "on" : "off"}`;
    this.offlineBanner.classList.toggle("hidden", !s.offline);
    this.statusLine.textContent = s.validation.ok ? s.status : s.validation.message;
    this.playButton.textContent = s.playing ? "pause" : "play";
    s.lengths.forEach((v, i) => {
      if (document.activeElement !== this.sliders[i]) this.sliders[i]!.value = String(v);
      if (document.activeElement !== this.numbers[i]) this.numbers[i]!.value = String(v);
    });
    const wanted = s.branches.map((b) => `${b.branch}:${b.kind}`).join("|");
    if (this.branchSelect.dataset.options !== wanted) {
      this.branchSelect.dataset.options = wanted;
      this.branchSelect.replaceChildren(
        ...s.branches.map((b) =>
          el("option", { value: b.branch }, `${b.branch} - ${b.kind}`),
        ),
      );
    }
    this.branchSelect.value = String(s.selectedBranch);
    if (document.activeElement !== this.paramSlider) {
      this.paramSlider.value = String(s.param);
    }
    this.snapBadge.classList.toggle("hidden", this.store.currentSnap() === null);
    this.draw();
  }

  private frame(t: number): void {
    const dt = this.lastFrame ? (t - this.lastFrame) / 1000 : 0;
    this.lastFrame = t;
    if (this.store.state.playing) {
      this.store.tick(dt);
    }
    requestAnimationFrame((next) => this.frame(next));
  }

  private draw(): void {
    const ctx = this.linkageCanvas.getContext("2d");
    const cctx = this.configCanvas.getContext("2d");
    if (!ctx || !cctx) return;
    const s = this.store.state;
    ctx.clearRect(0, 0, this.linkageCanvas.width, this.linkageCanvas.height);
    cctx.clearRect(0, 0, this.configCanvas.width, this.configCanvas.height);
    const rec = this.store.currentRecord();
    const records = s.trace?.records ?? [];
    if (rec) {
      const tf = fitTransform(records.length ? records : [rec], this.linkageCanvas.width, this.linkageCanvas.height);
      drawLinkage(ctx, rec, tf, s.overlays.diagonals);
    } else {
      ctx.fillStyle = "#718096";
      ctx.fillText("no configuration - adjust the lengths", 20, 30);
    }
    if (s.overlays.configCurve) {
      drawConfigSpace(
        cctx,
        this.configCanvas.width,
        this.configCanvas.height,
        records,
        rec,
        s.overlays.infinityMarkers ? infinityMarkerPoints(s.infinity) : [],
        s.trace?.branch ?? null,
      );
    }
  }
}
