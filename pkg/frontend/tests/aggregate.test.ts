import { describe, expect, it } from 'vitest';

import { aggregate, mean, parseRows, stddev } from '../src/aggregate.js';

const HEADER =
  'dataset,algo,S,trial,seed,eta_max,eta_avg,runtime_ms,work_edges,merges';

function csv(rows: string[]): string {
  return [HEADER, ...rows].join('\n');
}

describe('mean/stddev', () => {
  it('matches hand computation', () => {
    // hand: mean = (10+20+30)/3 = 20; sample var = (100+0+100)/2 = 100
    expect(mean([10, 20, 30])).toBe(20);
    expect(stddev([10, 20, 30])).toBe(10);
    // hand: mean = 2.5, var = ((1.5)^2*2 + (0.5)^2*2)/3 = (4.5+0.5)/3
    expect(stddev([1, 2, 3, 4])).toBeCloseTo(Math.sqrt(5 / 3), 12);
  });

  it('degenerate inputs', () => {
    expect(mean([])).toBe(0);
    expect(stddev([7])).toBe(0);
  });
});

describe('parseRows', () => {
  it('reads typed rows', () => {
    const rows = parseRows(csv(['synth,learned,0,0,1,0,0,12.5,100,3']));
    expect(rows).toHaveLength(1);
    expect(rows[0].algo).toBe('learned');
    expect(rows[0].runtime_ms).toBe(12.5);
  });

  it('rejects missing columns', () => {
    expect(() => parseRows('a,b\n1,2')).toThrow(/missing required column/);
  });
});

describe('aggregate', () => {
  it('aggregates trials into mean and stddev per (algo, S)', () => {
    const rows = parseRows(
      csv([
        'synth,learned,0,0,1,0,0,10,1,0',
        'synth,learned,0,1,2,0,0,20,1,0',
        'synth,learned,0,2,3,0,0,30,1,0',
        'synth,learned,5,0,1,8,2.5,40,1,0',
        'synth,learned,5,1,2,12,3.5,50,1,0',
        'synth,offline,0,0,1,0,0,5,1,0',
      ]),
    );
    const byMax = aggregate(rows, 'eta_max');
    const learned = byMax.get('learned')!;
    expect(learned).toHaveLength(2);
    // S=0 group: x = mean eta_max = 0; runtime mean 20, stddev 10
    expect(learned[0]).toMatchObject({ S: 0, x: 0, mean: 20, stddev: 10, trials: 3 });
    // S=5 group: x = (8+12)/2 = 10; runtime mean 45, stddev sqrt(50)
    expect(learned[1].x).toBe(10);
    expect(learned[1].mean).toBe(45);
    expect(learned[1].stddev).toBeCloseTo(Math.sqrt(50), 12);
    expect(byMax.get('offline')![0].mean).toBe(5);

    const byAvg = aggregate(rows, 'eta_avg');
    expect(byAvg.get('learned')![1].x).toBe(3);
  });

  it('single trial gives a zero-width band', () => {
    const rows = parseRows(csv(['synth,learned,0,0,1,0,0,10,1,0']));
    const pts = aggregate(rows, 'eta_max').get('learned')!;
    expect(pts[0].stddev).toBe(0);
  });

  it('sorts points by x for line drawing', () => {
    const rows = parseRows(
      csv([
        'synth,learned,20,0,1,90,9,99,1,0',
        'synth,learned,0,0,1,0,0,10,1,0',
        'synth,learned,10,0,1,40,4,50,1,0',
      ]),
    );
    const pts = aggregate(rows, 'eta_max').get('learned')!;
    expect(pts.map((p) => p.x)).toEqual([0, 40, 90]);
  });
});
