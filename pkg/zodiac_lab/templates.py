"""HTML and SVG templates for ZodiacLab report output."""

from html import escape
from typing import Dict, List, Sequence, Tuple


def generate_html_template(title: str, sections: Sequence[Tuple[str, str, str]]) -> str:
    """Generate the complete HTML report with embedded CSS and collapsible sections.

    Args:
        title: Document title
        sections: (badge text, heading, section HTML) triples in display order

    Returns:
        str: Complete HTML document as string
    """
    blocks = "\n".join(
        f"""
        <div class="section">
            <div class="section-header" onclick="toggleSection(this)">
                <h2><span class="badge">{escape(badge)}</span>{escape(heading)}</h2>
                <span class="toggle-icon">&#9660;</span>
            </div>
            <div class="section-content">
                {body}
            </div>
        </div>"""
        for badge, heading, body in sections
    )
    return f"""<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>{escape(title)}</title>
    <style>
        * {{
            margin: 0;
            padding: 0;
            box-sizing: border-box;
        }}

        body {{
            font-family: -apple-system, BlinkMacSystemFont, 'Segoe UI', Roboto, Oxygen, Ubuntu, Cantarell, sans-serif;
            line-height: 1.6;
            color: #333;
            background: #f5f5f5;
            padding: 20px;
        }}

        .container {{
            max-width: 1200px;
            margin: 0 auto;
            background: white;
            padding: 40px;
            border-radius: 8px;
            box-shadow: 0 2px 10px rgba(0,0,0,0.1);
        }}

        h1 {{
            color: #1a73e8;
            border-bottom: 3px solid #1a73e8;
            padding-bottom: 10px;
            margin-bottom: 30px;
        }}

        .section {{
            margin-bottom: 30px;
            border: 1px solid #e0e0e0;
            border-radius: 8px;
            overflow: hidden;
        }}

        .section-header {{
            background: linear-gradient(135deg, #667eea 0%, #764ba2 100%);
            color: white;
            padding: 15px 20px;
            cursor: pointer;
            display: flex;
            justify-content: space-between;
            align-items: center;
            user-select: none;
        }}

        .section-header h2 {{
            margin: 0;
            font-size: 20px;
        }}

        .section-header.collapsed .toggle-icon {{
            transform: rotate(-90deg);
        }}

        .section-content {{
            padding: 20px;
            background: #fafafa;
        }}

        .section-content.collapsed {{
            display: none;
        }}

        .section-content table {{
            width: 100%;
            border-collapse: collapse;
            margin: 15px 0;
            background: white;
            box-shadow: 0 1px 3px rgba(0,0,0,0.1);
        }}

        .section-content th {{
            background: linear-gradient(135deg, #667eea 0%, #764ba2 100%);
            color: white;
            padding: 12px;
            text-align: left;
            font-weight: 600;
        }}

        .section-content td {{
            padding: 10px 12px;
            border-bottom: 1px solid #e0e0e0;
            font-family: 'Monaco', 'Courier New', monospace;
        }}

        .badge {{
            display: inline-block;
            padding: 4px 12px;
            border-radius: 12px;
            font-size: 12px;
            font-weight: 600;
            margin-right: 8px;
            background: #e3f2fd;
            color: #1976d2;
        }}
    </style>
</head>
<body>
    <div class="container">
        <h1>{escape(title)}</h1>
{blocks}
    </div>

    <script>
        function toggleSection(header) {{
            const content = header.nextElementSibling;
            header.classList.toggle('collapsed');
            content.classList.toggle('collapsed');
        }}
    </script>
</body>
</html>
"""


def generate_svg_chart(rows: List[Dict[str, object]], uniform_baseline: float,
                       bayes_accuracy: float, labels: Dict[str, str]) -> str:
    """Grouped bar chart: real vs shuffled accuracy per model, with baseline lines.

    Args:
        rows: Summary rows (see utils.summaries.extract_summary_rows)
        uniform_baseline: Accuracy of a uniform random guesser
        bayes_accuracy: Best achievable accuracy under the generative process
        labels: Display name per model kind

    Returns:
        str: Standalone SVG document
    """
    width, height = 640, 400
    left, right, top, bottom = 70, 20, 40, 70
    plot_w = width - left - right
    plot_h = height - top - bottom

    peak = max([bayes_accuracy, uniform_baseline]
               + [float(r["test_acc"]) for r in rows]
               + [float(r["shuffled_mean"]) for r in rows])
    y_max = peak * 1.15 if peak > 0 else 1.0

    def y(value: float) -> float:
        return top + plot_h * (1.0 - value / y_max)

    group_w = plot_w / max(len(rows), 1)
    bar_w = group_w * 0.3
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="15">'
        f'Accuracy: real labels vs shuffled labels</text>',
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{top + plot_h}" stroke="#333"/>',
        f'<line x1="{left}" y1="{top + plot_h}" x2="{left + plot_w}" y2="{top + plot_h}" stroke="#333"/>',
    ]
    for i in range(5):
        tick = y_max * i / 4
        parts.append(f'<text x="{left - 6}" y="{y(tick) + 4:.1f}" text-anchor="end">{tick:.3f}</text>')

    for index, row in enumerate(rows):
        x0 = left + group_w * index + (group_w - 2 * bar_w) / 2
        real = float(row["test_acc"])
        shuffled = float(row["shuffled_mean"])
        name = escape(labels.get(str(row["model"]), str(row["model"])))
        parts.append(f'<g class="model-group" data-model="{escape(str(row["model"]))}">')
        parts.append(f'<rect class="bar-real" x="{x0:.1f}" y="{y(real):.1f}" width="{bar_w:.1f}" '
                     f'height="{top + plot_h - y(real):.1f}" fill="#667eea"/>')
        parts.append(f'<rect class="bar-shuffled" x="{x0 + bar_w:.1f}" y="{y(shuffled):.1f}" '
                     f'width="{bar_w:.1f}" height="{top + plot_h - y(shuffled):.1f}" fill="#bbb"/>')
        parts.append(f'<text x="{x0 + bar_w:.1f}" y="{top + plot_h + 18}" text-anchor="middle">{name}</text>')
        parts.append('</g>')

    for value, colour, caption in ((uniform_baseline, "#e74c3c", "uniform baseline"),
                                   (bayes_accuracy, "#27ae60", "Bayes accuracy")):
        parts.append(f'<line class="baseline" x1="{left}" y1="{y(value):.1f}" x2="{left + plot_w}" '
                     f'y2="{y(value):.1f}" stroke="{colour}" stroke-dasharray="6 4"/>')
        parts.append(f'<text x="{left + plot_w - 4}" y="{y(value) - 4:.1f}" text-anchor="end" '
                     f'fill="{colour}">{caption} {value:.3f}</text>')

    legend_y = height - 18
    parts.append(f'<rect x="{left}" y="{legend_y - 10}" width="12" height="12" fill="#667eea"/>')
    parts.append(f'<text x="{left + 18}" y="{legend_y}">real labels</text>')
    parts.append(f'<rect x="{left + 110}" y="{legend_y - 10}" width="12" height="12" fill="#bbb"/>')
    parts.append(f'<text x="{left + 128}" y="{legend_y}">shuffled labels (mean)</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
