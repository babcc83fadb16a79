import { mkdtempSync, writeFileSync } from 'node:fs'
import { tmpdir } from 'node:os'
import { join } from 'node:path'

export function tempDir(): string {
  return mkdtempSync(join(tmpdir(), 'fermigas-figures-'))
}

function csvLines(header: string[], rows: (string | number)[][]): string {
  const body = rows.map((r) => r.join(',')).join('\n')
  return `${header.join(',')}\n${body}\n`
}

/** tiny but shape-realistic stand-ins for the runner's figure CSVs */
export function writeFigureCsv(dir: string, figure: number): string {
  const path = join(dir, `figure${figure}.csv`)
  let text: string
  if (figure === 1) {
    text = csvLines(
      ['x', 'N_2_13', 'degenerate'],
      [
        [0, 0.5, 'false'],
        [1.25, 0.12, 'false'],
        [2.5, 0.0, 'false'],
        [3.75, 0.12, 'false'],
        [5, 0.5, 'false'],
      ],
    )
  } else if (figure === 2) {
    text = csvLines(
      ['height', 'N_1_23', 'N_2_13', 'degenerate'],
      [
        [0, 0.33, 0.26, 'false'],
        [1, 0.2, 0.1, 'false'],
        [2, 0.05, 0.15, 'false'],
        [4, 0.0, 0.25, 'false'],
        [8, 0.0, 0.267, 'false'],
      ],
    )
  } else if (figure === 3) {
    text = csvLines(
      ['edge', 'N_1_2', 'N_1_23', 'N_1_234', 'degenerate'],
      [
        [0.01, 0.5, 0.1667, 0.0625, 'false'],
        [1.0, 0.27, 0.09, 0.027, 'false'],
        [2.0, 0.0, 0.0, 0.0, 'false'],
        [3.0, 0.0, 0.0, 0.0, 'false'],
      ],
    )
  } else {
    text = csvLines(
      ['edge', 'S2_bits', 'S3_bits', 'S4_bits', 'degenerate'],
      [
        [0, 0.0, '', '', 'true'],
        [0.01, 0.0005, 2.0002, 3.4388, 'false'],
        [3.0, 1.98, 2.97, 3.95, 'false'],
        [6.0, 2.0, 3.0, 4.0, 'false'],
      ],
    )
  }
  writeFileSync(path, text)
  return path
}

export function writeText(dir: string, name: string, text: string): string {
  const path = join(dir, name)
  writeFileSync(path, text)
  return path
}
