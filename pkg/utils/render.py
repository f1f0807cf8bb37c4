"""SVG drawings of simultaneous interval representations.

One horizontal track per graph, top to bottom by graph index. Inside a track
intervals are packed greedily into rows; shared vertices are drawn bold in
every track they appear in.
"""
import io

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle

from graphs.sunflower import SunflowerInstance
from models.sunflower_proper import SimultaneousRepresentation

SCALE = 100
ROW_HEIGHT = 24
TRACK_GAP = 16
MARGIN = 20
COLORS = ('tab:green', 'tab:red', 'tab:blue', 'tab:orange', 'tab:purple', 'tab:brown')
LINESTYLES = ('solid', 'dotted', 'dashed', 'dashdot')


def _rows(vertices, intervals):
    """Greedy packing of intervals into rows, first fit by left endpoint."""
    rows = []
    placed = []
    for v in sorted(vertices, key=lambda v: (intervals[v][0], intervals[v][1], str(v))):
        l, _ = intervals[v]
        for r, end in enumerate(rows):
            if end < l:
                rows[r] = intervals[v][1]
                placed.append((v, r))
                break
        else:
            rows.append(intervals[v][1])
            placed.append((v, len(rows) - 1))
    return placed, len(rows)


def render_svg(rep: SimultaneousRepresentation, inst: SunflowerInstance, scale: int = SCALE,
               colors=COLORS) -> bytes:
    intervals = rep.intervals
    if intervals:
        lo = min(l for l, _ in intervals.values())
        hi = max(r for _, r in intervals.values())
    else:
        lo, hi = 0, 1
    width = float(hi - lo) * scale + 2 * MARGIN

    tracks = []
    height = MARGIN
    for i, g in enumerate(inst.graphs):
        placed, n_rows = _rows([v for v in g.vertices if v in intervals], intervals)
        tracks.append((i, placed, height))
        height += max(n_rows, 1) * ROW_HEIGHT + TRACK_GAP
    height += MARGIN

    with plt.rc_context({'svg.hashsalt': 'sunflower', 'svg.fonttype': 'none'}):
        fig = plt.figure(figsize=(width / 72.0, height / 72.0), dpi=72)
        ax = fig.add_axes((0, 0, 1, 1))
        ax.set_xlim(float(lo) * scale - MARGIN, float(hi) * scale + MARGIN)
        ax.set_ylim(height, 0)
        ax.axhline(height - MARGIN / 2, color='black', linewidth=0.5)
        for i, placed, top in tracks:
            color = colors[i % len(colors)]
            style = LINESTYLES[i % len(LINESTYLES)]
            for v, row in placed:
                l, r = intervals[v]
                shared = inst.is_shared(v)
                y = top + row * ROW_HEIGHT
                ax.add_patch(Rectangle((float(l) * scale, y + 4), float(r - l) * scale, ROW_HEIGHT - 8,
                                       fill=False, edgecolor='black' if shared else color,
                                       linewidth=2.5 if shared else 1.0, linestyle=style))
                ax.text(float(l) * scale + 3, y + ROW_HEIGHT / 2, str(v), fontsize=9,
                        va='center', fontweight='bold' if shared else 'normal')
        ax.set_axis_off()
        buf = io.BytesIO()
        fig.savefig(buf, format='svg', metadata={'Date': None})
        plt.close(fig)
    return buf.getvalue()
