import { numericCells, Table } from './csv.js'
import { CurveSpec, FigureRecipe } from './recipes.js'

export interface Point {
  px: number
  py: number
}

export interface Series {
  spec: CurveSpec
  /** polyline runs between gaps, already in pixel coordinates */
  segments: Point[][]
}

export interface Tick {
  value: number
  px: number
}

export interface PlotModel {
  width: number
  height: number
  margin: { left: number; right: number; top: number; bottom: number }
  /** plot area rectangle */
  area: { x0: number; y0: number; x1: number; y1: number }
  xTicks: Tick[]
  yTicks: Tick[]
  series: Series[]
}

export const DEFAULT_WIDTH = 720
export const DEFAULT_HEIGHT = 540

const MARGIN = { left: 70, right: 18, top: 42, bottom: 52 }

/** step sizes 1/2/5 x 10^k covering the range with ~count ticks */
export function niceTicks(min: number, max: number, count = 6): number[] {
  if (!(max > min)) return [min]
  const span = max - min
  const raw = span / count
  const mag = Math.pow(10, Math.floor(Math.log10(raw)))
  let step = mag
  for (const m of [1, 2, 5, 10]) {
    if (m * mag >= raw) {
      step = m * mag
      break
    }
  }
  const ticks: number[] = []
  const first = Math.ceil(min / step - 1e-9)
  const last = Math.floor(max / step + 1e-9)
  for (let k = first; k <= last; k++) {
    // index-based to avoid accumulation noise like 0.6000000000000001
    ticks.push(k === 0 ? 0 : parseFloat((k * step).toPrecision(12)))
  }
  return ticks
}

export function buildPlotModel(
  recipe: FigureRecipe,
  table: Table,
  width = DEFAULT_WIDTH,
  height = DEFAULT_HEIGHT,
): PlotModel {
  const xs = numericCells(table, recipe.xColumn)
  const columns = recipe.curves.map((c) => numericCells(table, c.column))

  const xValues = xs.filter((v): v is number => v !== null)
  const yValues = columns.flat().filter((v): v is number => v !== null)
  if (xValues.length === 0 || yValues.length === 0) {
    throw new Error('no numeric data to plot')
  }
  const xMin = Math.min(...xValues)
  const xMax = Math.max(...xValues)
  let yMin = Math.min(0, ...yValues)
  let yMax = Math.max(...yValues)
  if (yMax === yMin) yMax = yMin + 1
  const yPad = 0.05 * (yMax - yMin)
  yMax += yPad

  const area = {
    x0: MARGIN.left,
    y0: MARGIN.top,
    x1: width - MARGIN.right,
    y1: height - MARGIN.bottom,
  }
  const sx = (v: number) =>
    area.x0 + ((v - xMin) / (xMax - xMin || 1)) * (area.x1 - area.x0)
  const sy = (v: number) =>
    area.y1 - ((v - yMin) / (yMax - yMin)) * (area.y1 - area.y0)

  const series: Series[] = recipe.curves.map((spec, ci) => {
    const segments: Point[][] = []
    let run: Point[] = []
    xs.forEach((x, i) => {
      const y = columns[ci][i]
      if (x === null || y === null) {
        if (run.length > 0) segments.push(run)
        run = []
      } else {
        run.push({ px: sx(x), py: sy(y) })
      }
    })
    if (run.length > 0) segments.push(run)
    return { spec, segments }
  })

  return {
    width,
    height,
    margin: MARGIN,
    area,
    xTicks: niceTicks(xMin, xMax).map((value) => ({ value, px: sx(value) })),
    yTicks: niceTicks(yMin, yMax).map((value) => ({ value, px: sy(value) })),
    series,
  }
}

export function formatTick(value: number): string {
  if (value === 0) return '0'
  const abs = Math.abs(value)
  if (abs >= 1000 || abs < 0.001) return value.toExponential(1)
  return parseFloat(value.toPrecision(4)).toString()
}
