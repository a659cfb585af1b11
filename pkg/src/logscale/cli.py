"""``logscale`` command-line entry point.

Exit status: 0 success, 1 usage error, 2 domain error, 3 I/O error.
``--format json`` prints one JSON object per line.
"""

from __future__ import annotations

import json
import sys

import click

from . import difference, intervals, scale, score, synth
from .errors import LogScaleError, ScoreParseError

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_IO = 0, 1, 2, 3


class Ctx:
    def __init__(self, ref, base, fmt, strict):
        self.cfg = scale.make_config(ref, base)
        self.fmt = fmt
        self.strict = strict

    @property
    def json(self):
        return self.fmt == "json"

    def emit(self, record: dict, line: str):
        if self.json:
            click.echo(json.dumps(record, sort_keys=True, separators=(",", ":")))
        else:
            click.echo(line)


pass_ctx = click.make_pass_decorator(Ctx)


@click.group()
@click.option("--ref", "reference_freq", type=float, default=scale.DEFAULT_REFERENCE_FREQ,
              show_default=True, help="Reference frequency c in Hz for the anchor tone.")
@click.option("--base", "base_index", type=int, default=scale.DEFAULT_BASE_INDEX,
              show_default=True, help="Anchor tone index.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
@click.option("--strict/--lenient", default=True, help="Fail on unrenderable notes, or skip them with a warning.")
@click.pass_context
def cli(ctx, reference_freq, base_index, fmt, strict):
    """Logarithmic musical scale toolkit."""
    ctx.obj = Ctx(reference_freq, base_index, fmt, strict)


@cli.command("scale")
@click.argument("lo", type=int)
@click.argument("hi", type=int)
@pass_ctx
def cmd_scale(c: Ctx, lo, hi):
    """Frequency table for tones LO..HI."""
    if not 1 <= lo <= hi:
        raise click.UsageError(f"need 1 <= FROM <= TO, got {lo} {hi}")
    for m in range(lo, hi + 1):
        f = scale.tone_frequency(c.cfg, m)
        name = scale.note_name(m, c.cfg.base_index)
        label = f"{name}*" if name else ("silent" if m == 1 else "")
        c.emit({"index": m, "name": name, "frequency": f, "silent": m == 1},
               f"{m:>6}*  {label:<7} {f:10.2f} Hz")


@cli.command("census")
@click.argument("n_lo", type=int)
@click.argument("n_hi", type=int)
@pass_ctx
def cmd_census(c: Ctx, n_lo, n_hi):
    """Tone counts of octave blocks [4^n, 4^(n+1)) for n in N_LO..N_HI."""
    if n_lo > n_hi:
        raise click.UsageError(f"need N_LO <= N_HI, got {n_lo} {n_hi}")
    for n in range(n_lo, n_hi + 1):
        count = scale.octave_tone_count(n)
        c.emit({"octave": n, "first_tone": 4 ** n, "count": count},
               f"octave {n:>3}  from {4 ** n}*  {count} tones")


@cli.command("analyze")
@click.argument("indices", nargs=-1, type=int, required=True)
@click.option("--max-order", type=int, default=1, show_default=True)
@pass_ctx
def cmd_analyze(c: Ctx, indices, max_order):
    """Intervals, beat spectrum and closure of a chord."""
    chord = difference.Chord(indices)
    for y, x in ((a, b) for i, a in enumerate(chord.indices) for b in chord.indices[i + 1:]):
        ic = intervals.classify_interval(x, y)
        c.emit({"type": "interval", "x": x, "y": y, "kind": ic.kind, "ratio": ic.ratio,
                "p": ic.p, "q": ic.q, "base": ic.base},
               f"interval {x}*/{y}*  {ic.kind:<14} ratio {ic.ratio:.6f}"
               + (f"  ({ic.base}^{ic.p} / {ic.base}^{ic.q})" if ic.is_rational else ""))
    for t in difference.chord_spectrum(c.cfg, chord, max_order):
        c.emit({"type": "beat", "order": t.order, "ratio": str(t.ratio), "frequency": t.frequency,
                "in_scale": t.in_scale, "tone": t.tone_index},
               f"beat order {t.order}  ratio {str(t.ratio):<10} {t.frequency:10.2f} Hz  "
               + (f"in scale: {t.tone_index}*" if t.in_scale else "off scale"))
    for membership in difference.MEMBERSHIPS:
        r = difference.closure_report(chord.indices, membership)
        c.emit({"type": "closure", **r.to_record()},
               f"closure {membership:<10} {r.closed_pairs}/{r.pair_count} = {r.closure_ratio:.4f}")


@cli.command("search")
@click.option("--size", "k", type=int, required=True)
@click.option("--max", "max_index", type=int, required=True)
@click.option("--top", "top_t", type=int, default=10, show_default=True)
@click.option("--membership", type=click.Choice(difference.MEMBERSHIPS),
              default=difference.WITHIN_SET, show_default=True)
@pass_ctx
def cmd_search(c: Ctx, k, max_index, top_t, membership):
    """Exhaustive search for difference-tone-closed sets."""
    for rank, r in enumerate(difference.search_closed_sets(k, max_index, top_t, membership), start=1):
        wit = " ".join(f"{x}-{y}={d}" for x, y, d in r.witnesses)
        c.emit({"rank": rank, **r.to_record()},
               f"{rank:>3}  {{{', '.join(map(str, r.set))}}}  {r.closure_ratio:.4f}  {wit}")


@cli.command("render")
@click.argument("score_path", type=click.Path(dir_okay=False))
@click.argument("output", type=click.Path(dir_okay=False, allow_dash=True))
@click.option("--sample-rate", type=int, default=44100, show_default=True)
@click.option("--attack-ms", type=float, default=5.0, show_default=True)
@click.option("--release-ms", type=float, default=5.0, show_default=True)
@click.option("--clip", type=click.Choice([synth.NORMALIZE, synth.HARD_CLAMP]), default=synth.NORMALIZE)
@pass_ctx
def cmd_render(c: Ctx, score_path, output, sample_rate, attack_ms, release_ms, clip):
    """Render a score file to a 16-bit mono WAV."""
    sc = score.read_score(score_path, c.cfg.base_index)
    settings = synth.RenderSettings(sample_rate, attack_ms, release_ms, clip, c.strict)
    pcm = synth.render_score(sc, settings, c.cfg)
    if output == "-":
        synth.write_wav(pcm, sys.stdout.buffer)
        return
    synth.write_wav(pcm, output)
    c.emit({"output": output, "samples": len(pcm), "sample_rate": pcm.sample_rate},
           f"wrote {len(pcm)} samples at {pcm.sample_rate} Hz to {output}")


@cli.command("export-scl")
@click.argument("output", type=click.Path(dir_okay=False, allow_dash=True))
@pass_ctx
def cmd_export_scl(c: Ctx, output):
    """Write the keyboard octave as a Scala tuning file."""
    if output == "-":
        sys.stdout.buffer.write(score.export_scl(c.cfg))
        return
    data = score.export_scl(c.cfg, output)
    c.emit({"output": output, "bytes": len(data)}, f"wrote {output}")


@cli.command("beat-detect")
@click.argument("wav_path", type=click.Path(dir_okay=False))
@click.option("--band", nargs=2, type=float, required=True, help="Search band LO HI in Hz.")
@pass_ctx
def cmd_beat_detect(c: Ctx, wav_path, band):
    """Estimate the beat frequency of a WAV file."""
    pcm = synth.read_wav(wav_path)
    f = synth.estimate_beat_frequency(pcm, tuple(band))
    c.emit({"beat_frequency": f, "band": list(band)}, f"beat {f:.2f} Hz")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, prog_name="logscale", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return EXIT_USAGE
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except OSError as exc:
        click.echo(f"I/O error: {exc}", err=True)
        return EXIT_IO
    except ScoreParseError as exc:
        more = f" (+{len(exc.errors) - 1} more)" if len(exc.errors) > 1 else ""
        click.echo(f"error: {exc.errors[0]}{more}", err=True)
        return EXIT_DOMAIN
    except (LogScaleError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
