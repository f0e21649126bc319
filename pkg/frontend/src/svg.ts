import type { FigureData, Series } from "./figures.js";

const WIDTH = 860;
const HEIGHT = 560;
const MARGIN = { top: 48, right: 168, bottom: 56, left: 64 };

const PALETTE = [
  "#4c72b0",
  "#dd8452",
  "#55a868",
  "#c44e52",
  "#8172b3",
  "#937860",
  "#da8bc3",
  "#8c8c8c",
  "#ccb974",
];

const plotW = WIDTH - MARGIN.left - MARGIN.right;
const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;

function fmt(v: number): string {
  return v.toFixed(2);
}

function tickValues(lo: number, hi: number, target = 8): number[] {
  const span = hi - lo;
  const raw = span / target;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * mag).find((s) => span / s <= target) ?? mag * 10;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / step) * step; v <= hi + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function tickLabel(v: number): string {
  const rounded = Math.round(v * 1e6) / 1e6;
  return String(rounded);
}

/** y ticks at quarter turns when plotting radians, at 0.5 steps otherwise */
function yTicks(yMax: number): { value: number; label: string }[] {
  if (yMax > 4.0) {
    const names = ["0", "π/2", "π", "3π/2", "2π"];
    return names.map((label, i) => ({ value: (i * Math.PI) / 2, label }));
  }
  return [0, 0.5, 1, 1.5, 2].map((v) => ({ value: v, label: String(v) }));
}

function polyline(s: Series, x: (v: number) => number, y: (v: number) => number): string {
  const points = s.param
    .map((p, i) => ({ px: x(p), py: y(s.phi[i]) }))
    .filter(({ px, py }) => Number.isFinite(px) && Number.isFinite(py));
  return points.map(({ px, py }) => `${fmt(px)},${fmt(py)}`).join(" ");
}

/**
 * Deterministic standalone SVG of a multi-series figure. Text stays text
 * (generic sans-serif family), geometry is emitted with fixed two-decimal
 * pixel coordinates, and nothing depends on the environment.
 */
export function renderSvg(data: FigureData, title: string): string {
  const xValues = data.series.flatMap((s) => s.param);
  const xMin = Math.min(...xValues);
  const xMax = Math.max(...xValues);
  const x = (v: number) => MARGIN.left + ((v - xMin) / (xMax - xMin)) * plotW;
  const y = (v: number) => MARGIN.top + plotH - (v / data.yMax) * plotH;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="26" text-anchor="middle" font-family="sans-serif" font-size="16">${title}</text>`,
  );

  // frame
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" height="${plotH}" fill="none" stroke="black" stroke-width="1"/>`,
  );

  for (const t of tickValues(xMin, xMax)) {
    const px = fmt(x(t));
    parts.push(
      `<line x1="${px}" y1="${MARGIN.top + plotH}" x2="${px}" y2="${MARGIN.top + plotH + 5}" stroke="black"/>`,
      `<text x="${px}" y="${MARGIN.top + plotH + 20}" text-anchor="middle" font-family="sans-serif" font-size="12">${tickLabel(t)}</text>`,
    );
  }
  for (const { value, label } of yTicks(data.yMax)) {
    const py = fmt(y(value));
    parts.push(
      `<line x1="${MARGIN.left - 5}" y1="${py}" x2="${MARGIN.left}" y2="${py}" stroke="black"/>`,
      `<text x="${MARGIN.left - 9}" y="${py}" dy="4" text-anchor="end" font-family="sans-serif" font-size="12">${label}</text>`,
      `<line x1="${MARGIN.left}" y1="${py}" x2="${MARGIN.left + plotW}" y2="${py}" stroke="#dddddd" stroke-width="0.5"/>`,
    );
  }
  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${HEIGHT - 14}" text-anchor="middle" font-family="sans-serif" font-size="13">${data.xLabel}</text>`,
    `<text x="20" y="${MARGIN.top + plotH / 2}" text-anchor="middle" font-family="sans-serif" font-size="13" transform="rotate(-90 20 ${MARGIN.top + plotH / 2})">${data.yLabel}</text>`,
  );

  data.series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    parts.push(
      `<polyline fill="none" stroke="${color}" stroke-width="1.6" points="${polyline(s, x, y)}"/>`,
    );
    const ly = MARGIN.top + 16 + i * 20;
    const lx = MARGIN.left + plotW + 14;
    parts.push(
      `<line x1="${lx}" y1="${ly - 4}" x2="${lx + 22}" y2="${ly - 4}" stroke="${color}" stroke-width="2"/>`,
      `<text x="${lx + 28}" y="${ly}" font-family="sans-serif" font-size="12">${s.label} ${s.legend}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
