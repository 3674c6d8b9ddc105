#!/usr/bin/env python3
"""Render the classic spiral figures as deterministic SVGs.

Produces in out/: the bare spiral, the square-number arms, the
divisible-by-7 and divisible-by-11 group systems, and two convergence
charts (band-area ratios, successor-square angles).
"""
import pathlib

from sqspiral.arms import enumerate_arms, parse_group
from sqspiral.series import square_angle_series, square_band_ratio_series
from sqspiral.svg import GroupStyle, RenderSpec, render_report_figure, render_svg
from sqspiral.verify import _table


def main() -> None:
    out = pathlib.Path(__file__).parent / "out"
    out.mkdir(exist_ok=True)
    table = _table(600)

    (out / "spiral_bare.svg").write_text(
        render_svg(table, RenderSpec(max_n=300)))

    squares = parse_group("squares")
    q_arms = [a for a in enumerate_arms(table, squares, 300)
              if a.second_differential == 18]
    (out / "spiral_squares.svg").write_text(render_svg(table, RenderSpec(
        max_n=300, groups=(GroupStyle(squares, color="#2d7d46"),),
        arm_overlays=tuple(q_arms))))

    for spec_str, color in (("div:7", "#b03a2e"), ("div:11", "#b08c2e")):
        group = parse_group(spec_str)
        arms = enumerate_arms(table, group, 600)
        dominant = [a for a in arms
                    if a.second_differential in (20, 21, 22)][:12]
        name = spec_str.replace(":", "")
        (out / f"spiral_{name}.svg").write_text(render_svg(table, RenderSpec(
            max_n=600, groups=(GroupStyle(group, color=color),),
            arm_overlays=tuple(dominant))))

    (out / "band_ratio_chart.svg").write_text(
        render_report_figure(square_band_ratio_series(60)))
    (out / "square_angle_chart.svg").write_text(
        render_report_figure(square_angle_series(table, 20)))

    print(f"figures in {out}")


if __name__ == "__main__":
    main()
