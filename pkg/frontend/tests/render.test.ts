import { existsSync, mkdtempSync, readFileSync, writeFileSync } from 'fs';
import { tmpdir } from 'os';
import { join } from 'path';

import { execFileSync } from 'child_process';
import { describe, expect, it } from 'vitest';

import { aggregate, parseRows } from '../src/aggregate.js';
import { renderSvg } from '../src/render.js';

const HEADER =
  'dataset,algo,S,trial,seed,eta_max,eta_avg,runtime_ms,work_edges,merges';

const THIRTY_ROWS = [
  HEADER,
  ...[0, 10, 20].flatMap((s) =>
    Array.from({ length: 10 }, (_, trial) =>
      `synth,learned,${s},${trial},${trial},${s * 4 + trial},${s + trial / 10},` +
      `${100 + s * 10 + trial},${1000 + s},${5}`,
    ),
  ),
].join('\n');

describe('renderSvg', () => {
  it('renders one line and band per algorithm with 3 x-points', () => {
    const series = aggregate(parseRows(THIRTY_ROWS), 'eta_max');
    expect(series.get('learned')).toHaveLength(3);
    const svg = renderSvg(series, 'eta_max', 'synth');
    expect(svg.startsWith('<svg')).toBe(true);
    expect(svg).toContain('maximum prediction error');
    expect(svg).toContain('runtime (ms)');
  });
});

describe('plot_results CLI', () => {
  it('emits the two chart files from a synthetic CSV', () => {
    const dir = mkdtempSync(join(tmpdir(), 'incscc-plots-'));
    const csvPath = join(dir, 'rows.csv');
    writeFileSync(csvPath, THIRTY_ROWS);
    execFileSync('node', ['dist/main.js', csvPath, '--out-dir', dir]);
    for (const name of ['runtime_vs_eta_max.svg', 'runtime_vs_eta_avg.svg']) {
      const p = join(dir, name);
      expect(existsSync(p)).toBe(true);
      expect(readFileSync(p, 'utf8')).toContain('<svg');
    }
  });
});
