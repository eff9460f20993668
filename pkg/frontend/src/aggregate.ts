import { readFileSync } from 'fs';
import Papa from 'papaparse';

/** One row of the benchmark harness CSV. */
export interface RunRow {
  dataset: string;
  algo: string;
  S: number;
  trial: number;
  seed: number;
  eta_max: number;
  eta_avg: number;
  runtime_ms: number;
  work_edges: number;
  merges: number;
}

export type ErrorMetric = 'eta_max' | 'eta_avg';

/** Aggregated point: trials of one (algo, S) group. */
export interface SeriesPoint {
  S: number;
  x: number; // mean of the chosen error metric over trials
  mean: number; // mean runtime_ms
  stddev: number; // sample stddev of runtime_ms (0 for a single trial)
  trials: number;
}

export const REQUIRED_COLUMNS = [
  'dataset', 'algo', 'S', 'trial', 'seed', 'eta_max', 'eta_avg',
  'runtime_ms', 'work_edges', 'merges',
];

export function mean(values: number[]): number {
  if (values.length === 0) return 0;
  return values.reduce((a, b) => a + b, 0) / values.length;
}

export function stddev(values: number[]): number {
  if (values.length <= 1) return 0;
  const avg = mean(values);
  const variance =
    values.reduce((sum, v) => sum + (v - avg) ** 2, 0) / (values.length - 1);
  return Math.sqrt(variance);
}

export function parseRows(csvText: string): RunRow[] {
  const parsed = Papa.parse<RunRow>(csvText.trim(), {
    header: true,
    dynamicTyping: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const e = parsed.errors[0];
    throw new Error(`CSV parse error at row ${e.row}: ${e.message}`);
  }
  const fields = parsed.meta.fields ?? [];
  for (const col of REQUIRED_COLUMNS) {
    if (!fields.includes(col)) {
      throw new Error(`CSV is missing required column '${col}'`);
    }
  }
  return parsed.data;
}

export function readRows(csvPath: string): RunRow[] {
  return parseRows(readFileSync(csvPath, 'utf8'));
}

/**
 * Group rows by algorithm and S, aggregating trials into one point per
 * group: mean/stddev of runtime, x = mean error metric. Points come back
 * sorted by x so they can be drawn as a line.
 */
export function aggregate(
  rows: RunRow[],
  metric: ErrorMetric,
): Map<string, SeriesPoint[]> {
  const groups = new Map<string, Map<number, RunRow[]>>();
  for (const row of rows) {
    let byS = groups.get(row.algo);
    if (!byS) {
      byS = new Map();
      groups.set(row.algo, byS);
    }
    const bucket = byS.get(row.S);
    if (bucket) bucket.push(row);
    else byS.set(row.S, [row]);
  }
  const out = new Map<string, SeriesPoint[]>();
  for (const [algo, byS] of groups) {
    const points: SeriesPoint[] = [];
    for (const [s, bucket] of byS) {
      points.push({
        S: s,
        x: mean(bucket.map((r) => r[metric])),
        mean: mean(bucket.map((r) => r.runtime_ms)),
        stddev: stddev(bucket.map((r) => r.runtime_ms)),
        trials: bucket.length,
      });
    }
    points.sort((a, b) => a.x - b.x);
    out.set(algo, points);
  }
  return out;
}
