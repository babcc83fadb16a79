import { readFileSync } from 'node:fs'
import Papa from 'papaparse'

export interface Table {
  columns: string[]
  rows: Record<string, string>[]
}

export class MissingColumnError extends Error {
  constructor(path: string, columns: string[]) {
    super(`${path}: missing column(s) ${columns.join(', ')}`)
    this.name = 'MissingColumnError'
  }
}

export function loadTable(path: string): Table {
  const text = readFileSync(path, 'utf8')
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  })
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0]
    throw new Error(`${path}: CSV parse error ${e.code} at row ${e.row}: ${e.message}`)
  }
  const columns = parsed.meta.fields ?? []
  if (columns.length === 0) {
    throw new Error(`${path}: no header row`)
  }
  return { columns, rows: parsed.data }
}

export function requireColumns(table: Table, path: string, needed: string[]): void {
  const missing = needed.filter((c) => !table.columns.includes(c))
  if (missing.length > 0) {
    throw new MissingColumnError(path, missing)
  }
}

/**
 * Numeric curve values; empty or unparsable cells become null (a gap in
 * the rendered curve). Degenerate rows carry empty cells for whatever
 * could not be computed, so gaps follow the data cell by cell.
 */
export function numericCells(table: Table, column: string): (number | null)[] {
  return table.rows.map((row) => {
    const cell = (row[column] ?? '').trim()
    if (cell === '') return null
    const value = Number(cell)
    return Number.isFinite(value) ? value : null
  })
}
