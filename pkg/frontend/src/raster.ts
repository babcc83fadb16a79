import { PNG } from 'pngjs'
import { Table } from './csv.js'
import { buildPlotModel, Point } from './plotmodel.js'
import { FigureRecipe } from './recipes.js'

// 6px-on / 4px-off along the segment for dashed curves
const DASH_ON = 6
const DASH_PERIOD = 10

function hexToRgb(hex: string): [number, number, number] {
  const v = parseInt(hex.slice(1), 16)
  return [(v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff]
}

function setPixel(png: PNG, x: number, y: number, rgb: [number, number, number]): void {
  if (x < 0 || y < 0 || x >= png.width || y >= png.height) return
  const idx = (png.width * y + x) << 2
  png.data[idx] = rgb[0]
  png.data[idx + 1] = rgb[1]
  png.data[idx + 2] = rgb[2]
  png.data[idx + 3] = 255
}

function drawDot(png: PNG, x: number, y: number, rgb: [number, number, number]): void {
  // 2x2 block: cheap line thickness without antialiasing
  setPixel(png, x, y, rgb)
  setPixel(png, x + 1, y, rgb)
  setPixel(png, x, y + 1, rgb)
  setPixel(png, x + 1, y + 1, rgb)
}

function drawSegment(
  png: PNG,
  a: Point,
  b: Point,
  rgb: [number, number, number],
  dashed: boolean,
  phase: number,
): number {
  const dx = b.px - a.px
  const dy = b.py - a.py
  const steps = Math.max(1, Math.ceil(Math.max(Math.abs(dx), Math.abs(dy))))
  for (let i = 0; i <= steps; i++) {
    const t = i / steps
    const dist = phase + t * Math.hypot(dx, dy)
    if (dashed && dist % DASH_PERIOD > DASH_ON) continue
    drawDot(png, Math.round(a.px + t * dx), Math.round(a.py + t * dy), rgb)
  }
  return phase + Math.hypot(dx, dy)
}

/** Raster fallback: plot frame and curves only, no text labels. */
export function renderPng(recipe: FigureRecipe, table: Table): Buffer {
  const model = buildPlotModel(recipe, table)
  const png = new PNG({ width: model.width, height: model.height })
  png.data.fill(255)

  const frame: [number, number, number] = [51, 51, 51]
  const { area } = model
  for (let x = Math.round(area.x0); x <= Math.round(area.x1); x++) {
    setPixel(png, x, Math.round(area.y0), frame)
    setPixel(png, x, Math.round(area.y1), frame)
  }
  for (let y = Math.round(area.y0); y <= Math.round(area.y1); y++) {
    setPixel(png, Math.round(area.x0), y, frame)
    setPixel(png, Math.round(area.x1), y, frame)
  }
  for (const t of model.xTicks) {
    for (let dy = 1; dy <= 5; dy++) setPixel(png, Math.round(t.px), Math.round(area.y1) + dy, frame)
  }
  for (const t of model.yTicks) {
    for (let dx = 1; dx <= 5; dx++) setPixel(png, Math.round(area.x0) - dx, Math.round(t.px), frame)
  }

  for (const s of model.series) {
    const rgb = hexToRgb(s.spec.color)
    const dashed = s.spec.style === 'dashed'
    for (const run of s.segments) {
      let phase = 0
      for (let i = 1; i < run.length; i++) {
        phase = drawSegment(png, run[i - 1], run[i], rgb, dashed, phase)
      }
      if (run.length === 1) drawDot(png, Math.round(run[0].px), Math.round(run[0].py), rgb)
    }
  }
  return PNG.sync.write(png)
}
