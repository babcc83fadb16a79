export type LineStyle = 'solid' | 'dashed'

export interface CurveSpec {
  /** CSV column holding the curve values */
  column: string
  label: string
  style: LineStyle
  color: string
}

export interface FigureRecipe {
  figure: number
  csvPath: string
  xColumn: string
  xLabel: string
  yLabel: string
  title: string
  curves: CurveSpec[]
}

const PALETTE = {
  blue: '#1f77b4',
  orange: '#e07b00',
  green: '#2ca02c',
}

/**
 * Column-to-curve mappings for the four standard figures. Solid/dashed
 * assignments follow the figure captions: figure 2 draws N_2_13 solid and
 * N_1_23 dashed; figure 4 draws S2 dashed and S3 solid.
 */
const RECIPES: Omit<FigureRecipe, 'csvPath'>[] = [
  {
    figure: 1,
    xColumn: 'x',
    xLabel: 'x = k_F r (fermion 2 position)',
    yLabel: 'negativity',
    title: 'Line: fermion 2 between fermions 1 and 3',
    curves: [
      { column: 'N_2_13', label: 'N[2,13]', style: 'solid', color: PALETTE.blue },
    ],
  },
  {
    figure: 2,
    xColumn: 'height',
    xLabel: 'apex height (k_F units)',
    yLabel: 'negativity',
    title: 'Isosceles triangle: apex fermion 1 leaving the base',
    curves: [
      { column: 'N_2_13', label: 'N[2,13] = N[3,12]', style: 'solid', color: PALETTE.blue },
      { column: 'N_1_23', label: 'N[1,23]', style: 'dashed', color: PALETTE.orange },
    ],
  },
  {
    figure: 3,
    xColumn: 'edge',
    xLabel: 'edge length (k_F units)',
    yLabel: 'negativity',
    title: 'Regular simplex: one fermion against the rest',
    curves: [
      { column: 'N_1_2', label: 'N[1,2]', style: 'solid', color: PALETTE.green },
      { column: 'N_1_23', label: 'N[1,23]', style: 'solid', color: PALETTE.blue },
      { column: 'N_1_234', label: 'N[1,234]', style: 'dashed', color: PALETTE.orange },
    ],
  },
  {
    figure: 4,
    xColumn: 'edge',
    xLabel: 'edge length (k_F units)',
    yLabel: 'entropy [bits]',
    title: 'Regular simplex: von Neumann entropy',
    curves: [
      { column: 'S2_bits', label: 'S2', style: 'dashed', color: PALETTE.orange },
      { column: 'S3_bits', label: 'S3', style: 'solid', color: PALETTE.blue },
      { column: 'S4_bits', label: 'S4', style: 'solid', color: PALETTE.green },
    ],
  },
]

export function figureRecipe(figure: number, csvPath: string): FigureRecipe {
  const found = RECIPES.find((r) => r.figure === figure)
  if (!found) {
    throw new RangeError(`figure must be 1, 2, 3 or 4, got ${figure}`)
  }
  return { ...found, csvPath }
}
