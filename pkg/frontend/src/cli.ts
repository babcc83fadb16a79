#!/usr/bin/env node
import { fileURLToPath } from 'node:url'
import { renderToFile } from './render.js'

const USAGE = 'usage: fermigas-render [render] --figure <1|2|3|4> --csv PATH --out PATH.[svg|png]'

interface Args {
  figure: number
  csv: string
  out: string
}

export function parseArgs(argv: string[]): Args {
  const rest = argv[0] === 'render' ? argv.slice(1) : [...argv]
  const opts: Record<string, string> = {}
  for (let i = 0; i < rest.length; i += 2) {
    const key = rest[i]
    const value = rest[i + 1]
    if (!key.startsWith('--') || value === undefined) {
      throw new RangeError(`bad argument '${key}'\n${USAGE}`)
    }
    opts[key.slice(2)] = value
  }
  const unknown = Object.keys(opts).filter((k) => !['figure', 'csv', 'out'].includes(k))
  if (unknown.length > 0) {
    throw new RangeError(`unknown option(s) --${unknown.join(', --')}\n${USAGE}`)
  }
  for (const key of ['figure', 'csv', 'out']) {
    if (!(key in opts)) {
      throw new RangeError(`missing required option --${key}\n${USAGE}`)
    }
  }
  const figure = Number(opts.figure)
  if (!Number.isInteger(figure)) {
    throw new RangeError(`--figure must be an integer\n${USAGE}`)
  }
  return { figure, csv: opts.csv, out: opts.out }
}

export function main(argv: string[]): number {
  let args: Args
  try {
    args = parseArgs(argv)
  } catch (err) {
    console.error(`error: ${(err as Error).message}`)
    return 2
  }
  try {
    const result = renderToFile(args.figure, args.csv, args.out)
    console.log(`wrote ${result.outPath} (${result.format}, ${result.curves} curves)`)
    return 0
  } catch (err) {
    console.error(`error: ${(err as Error).message}`)
    // bad figure id / extension are usage errors; IO and column failures are not
    return err instanceof RangeError ? 2 : 1
  }
}

if (process.argv[1] && fileURLToPath(import.meta.url) === process.argv[1]) {
  process.exit(main(process.argv.slice(2)))
}
