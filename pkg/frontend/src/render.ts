import * as echarts from 'echarts';

import { ErrorMetric, SeriesPoint } from './aggregate.js';

const METRIC_LABEL: Record<ErrorMetric, string> = {
  eta_max: 'maximum prediction error',
  eta_avg: 'average prediction error',
};

const PALETTE = ['#2ca02c', '#1f77b4', '#d62728', '#9467bd', '#ff7f0e'];

/**
 * Build one chart as an SVG string: per algorithm a mean-runtime line with
 * a shaded +-stddev band around it, against the chosen error metric.
 */
export function renderSvg(
  series: Map<string, SeriesPoint[]>,
  metric: ErrorMetric,
  title: string,
  width = 900,
  height = 600,
): string {
  const chart = echarts.init(null as never, null, {
    renderer: 'svg',
    ssr: true,
    width,
    height,
  });

  const echartsSeries: echarts.SeriesOption[] = [];
  let colorIdx = 0;
  for (const [algo, points] of series) {
    const color = PALETTE[colorIdx++ % PALETTE.length];
    // band: invisible lower line, stacked area of 2*stddev on top of it
    echartsSeries.push({
      name: `${algo}-band-lo`,
      type: 'line',
      data: points.map((p) => [p.x, p.mean - p.stddev]),
      lineStyle: { opacity: 0 },
      stack: `band-${algo}`,
      symbol: 'none',
      silent: true,
      tooltip: { show: false },
    });
    echartsSeries.push({
      name: `${algo}-band`,
      type: 'line',
      data: points.map((p) => [p.x, 2 * p.stddev]),
      lineStyle: { opacity: 0 },
      areaStyle: { color, opacity: 0.25 },
      stack: `band-${algo}`,
      symbol: 'none',
      silent: true,
      tooltip: { show: false },
    });
    echartsSeries.push({
      name: algo,
      type: 'line',
      data: points.map((p) => [p.x, p.mean]),
      itemStyle: { color },
      lineStyle: { color, width: 2 },
      symbol: 'circle',
      symbolSize: 6,
    });
  }

  chart.setOption({
    animation: false,
    title: { text: title, left: 'center' },
    legend: {
      top: 28,
      data: [...series.keys()],
    },
    xAxis: {
      type: 'value',
      name: METRIC_LABEL[metric],
      nameLocation: 'middle',
      nameGap: 28,
    },
    yAxis: {
      type: 'value',
      name: 'runtime (ms)',
      nameLocation: 'middle',
      nameGap: 48,
    },
    series: echartsSeries,
  });

  const svg = chart.renderToSVGString();
  chart.dispose();
  return svg;
}
