import { writeFileSync } from 'node:fs'
import { extname } from 'node:path'
import { loadTable, requireColumns } from './csv.js'
import { renderPng } from './raster.js'
import { figureRecipe } from './recipes.js'
import { renderSvg } from './svgplot.js'

export interface RenderResult {
  format: 'svg' | 'png'
  curves: number
  outPath: string
}

/**
 * Render a figure CSV to `outPath` (.svg or .png). Throws on a missing
 * file, a missing mapped column, or an unsupported extension.
 */
export function renderToFile(figure: number, csvPath: string, outPath: string): RenderResult {
  const recipe = figureRecipe(figure, csvPath)
  const table = loadTable(csvPath)
  requireColumns(table, csvPath, [recipe.xColumn, ...recipe.curves.map((c) => c.column)])

  const ext = extname(outPath).toLowerCase()
  if (ext === '.svg') {
    writeFileSync(outPath, renderSvg(recipe, table))
    return { format: 'svg', curves: recipe.curves.length, outPath }
  }
  if (ext === '.png') {
    writeFileSync(outPath, renderPng(recipe, table))
    return { format: 'png', curves: recipe.curves.length, outPath }
  }
  throw new RangeError(`output extension must be .svg or .png, got '${ext || outPath}'`)
}
