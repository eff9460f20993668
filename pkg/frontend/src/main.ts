#!/usr/bin/env node
// Render a benchmark CSV into the two runtime-vs-error charts:
//   plot_results <csv> [--out-dir DIR]
// Emits runtime_vs_eta_max.svg and runtime_vs_eta_avg.svg.

import { mkdirSync, writeFileSync } from 'fs';
import { basename, join } from 'path';

import { aggregate, ErrorMetric, readRows } from './aggregate.js';
import { renderSvg } from './render.js';

function usage(): never {
  console.error('usage: plot_results <csv> [--out-dir DIR]');
  process.exit(2);
}

export function main(argv: string[]): number {
  const args = argv.slice(2);
  let csvPath: string | undefined;
  let outDir = '.';
  for (let i = 0; i < args.length; i++) {
    if (args[i] === '--out-dir') {
      outDir = args[++i] ?? usage();
    } else if (args[i].startsWith('-')) {
      usage();
    } else if (csvPath === undefined) {
      csvPath = args[i];
    } else {
      usage();
    }
  }
  if (!csvPath) usage();

  const rows = readRows(csvPath);
  if (rows.length === 0) {
    console.error(`error: ${csvPath} has no data rows`);
    return 1;
  }
  const dataset = rows[0].dataset;
  mkdirSync(outDir, { recursive: true });
  for (const metric of ['eta_max', 'eta_avg'] as ErrorMetric[]) {
    const series = aggregate(rows, metric);
    const svg = renderSvg(series, metric, `${dataset} (${basename(csvPath)})`);
    const outPath = join(outDir, `runtime_vs_${metric}.svg`);
    writeFileSync(outPath, svg);
    console.log(`wrote ${outPath}`);
  }
  return 0;
}

process.exit(main(process.argv));
