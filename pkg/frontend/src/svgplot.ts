import { Table } from './csv.js'
import { buildPlotModel, formatTick, PlotModel } from './plotmodel.js'
import { FigureRecipe } from './recipes.js'

const DASH_PATTERN = '8 5'
const FONT = 'font-family="Helvetica, Arial, sans-serif"'

function esc(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
}

function pathData(segments: { px: number; py: number }[][]): string {
  // one path per curve; gaps become fresh M subpaths
  return segments
    .map((run) =>
      run
        .map((p, i) => `${i === 0 ? 'M' : 'L'}${p.px.toFixed(2)},${p.py.toFixed(2)}`)
        .join(''),
    )
    .join('')
}

function axes(model: PlotModel): string {
  const { area } = model
  const parts: string[] = []
  for (const t of model.xTicks) {
    parts.push(
      `<line x1="${t.px.toFixed(2)}" y1="${area.y0}" x2="${t.px.toFixed(2)}" y2="${area.y1}" stroke="#e0e0e0"/>`,
      `<line x1="${t.px.toFixed(2)}" y1="${area.y1}" x2="${t.px.toFixed(2)}" y2="${area.y1 + 5}" stroke="#333"/>`,
      `<text x="${t.px.toFixed(2)}" y="${area.y1 + 20}" text-anchor="middle" font-size="12" ${FONT}>${formatTick(t.value)}</text>`,
    )
  }
  for (const t of model.yTicks) {
    parts.push(
      `<line x1="${area.x0}" y1="${t.px.toFixed(2)}" x2="${area.x1}" y2="${t.px.toFixed(2)}" stroke="#e0e0e0"/>`,
      `<line x1="${area.x0 - 5}" y1="${t.px.toFixed(2)}" x2="${area.x0}" y2="${t.px.toFixed(2)}" stroke="#333"/>`,
      `<text x="${area.x0 - 9}" y="${(t.px + 4).toFixed(2)}" text-anchor="end" font-size="12" ${FONT}>${formatTick(t.value)}</text>`,
    )
  }
  parts.push(
    `<rect x="${area.x0}" y="${area.y0}" width="${area.x1 - area.x0}" height="${area.y1 - area.y0}" fill="none" stroke="#333"/>`,
  )
  return parts.join('\n')
}

function legend(model: PlotModel): string {
  const x = model.area.x0 + 12
  let y = model.area.y0 + 16
  const parts: string[] = []
  for (const s of model.series) {
    const dash = s.spec.style === 'dashed' ? ` stroke-dasharray="${DASH_PATTERN}"` : ''
    parts.push(
      `<line x1="${x}" y1="${y - 4}" x2="${x + 28}" y2="${y - 4}" stroke="${s.spec.color}" stroke-width="2"${dash}/>`,
      `<text x="${x + 34}" y="${y}" font-size="13" ${FONT}>${esc(s.spec.label)}</text>`,
    )
    y += 18
  }
  return parts.join('\n')
}

export function renderSvg(recipe: FigureRecipe, table: Table): string {
  const model = buildPlotModel(recipe, table)
  const { width, height, area } = model
  const curves = model.series
    .map((s) => {
      const dash = s.spec.style === 'dashed' ? ` stroke-dasharray="${DASH_PATTERN}"` : ''
      return (
        `<path class="curve" data-column="${esc(s.spec.column)}" ` +
        `data-style="${s.spec.style}" d="${pathData(s.segments)}" ` +
        `fill="none" stroke="${s.spec.color}" stroke-width="2"${dash}/>`
      )
    })
    .join('\n')
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    `<rect width="${width}" height="${height}" fill="white"/>`,
    `<text x="${width / 2}" y="24" text-anchor="middle" font-size="15" ${FONT}>${esc(recipe.title)}</text>`,
    axes(model),
    curves,
    legend(model),
    `<text x="${(area.x0 + area.x1) / 2}" y="${height - 12}" text-anchor="middle" font-size="13" ${FONT}>${esc(recipe.xLabel)}</text>`,
    `<text x="18" y="${(area.y0 + area.y1) / 2}" text-anchor="middle" font-size="13" ${FONT} transform="rotate(-90 18 ${(area.y0 + area.y1) / 2})">${esc(recipe.yLabel)}</text>`,
    `</svg>`,
    ``,
  ].join('\n')
}
