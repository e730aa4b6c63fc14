"""Command-line front end: ``subgames analyze 1,3,4`` and friends.

Exit codes: 0 clean, 1 mismatch or counterexample, 2 horizon exhausted,
3 usage or parameter error.
"""

from __future__ import annotations

import functools
import sys
from typing import Callable

import click

from .bipartite import lemma_checks
from .catalog import family as lookup_family, predict
from .core import DEFAULT_MAX_HORIZON, HorizonExhausted, SubgamesError, SubtractionSet, analyze, parity_analysis
from .expansion import full_report
from .patterns import InadmissibleParameters
from .reports import RunConfig, digits, game_report, render_report
from .scanner import enumerate_sets, scan_conjecture1, scan_conjecture2, scan_keven_claim
from .verify import sweep, verify

EXIT_OK, EXIT_FINDING, EXIT_HORIZON, EXIT_USAGE = 0, 1, 2, 3


class UsageError(SubgamesError):
    pass


def parse_set(text: str) -> SubtractionSet:
    """'4,3,1' -> {1,3,4}. Raises UsageError on empty, zero or junk tokens."""
    tokens = [t.strip() for t in text.split(",")]
    if not text.strip() or any(not t for t in tokens):
        raise UsageError(f"empty subtraction set or token in {text!r}")
    try:
        moves = [int(t) for t in tokens]
    except ValueError:
        raise UsageError(f"non-numeric token in {text!r}") from None
    if any(m <= 0 for m in moves):
        raise UsageError("moves must be positive")
    return SubtractionSet.of(moves)


def parse_values(text: str) -> list[int]:
    """'5' -> [5]; '2..6' -> [2..6]; '2,4,8' -> [2,4,8]; '2..6,9' works too."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if ".." in part:
                lo, hi = part.split("..")
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise UsageError(f"empty range {part!r}")
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad value or range {text!r}") from None
    return sorted(set(out))


def parse_params(args: list[str]) -> dict[str, str]:
    """['--a', '6', '--b=8'] -> {'a': '6', 'b': '8'}."""
    out: dict[str, str] = {}
    it = iter(args)
    for tok in it:
        if not tok.startswith("--") or len(tok) < 3:
            raise UsageError(f"unexpected argument {tok!r}")
        name = tok[2:]
        if "=" in name:
            name, value = name.split("=", 1)
        else:
            value = next(it, None)
            if value is None:
                raise UsageError(f"missing value for --{name}")
        if name in out:
            raise UsageError(f"--{name} given twice")
        out[name] = value
    return out


def _emit(config: RunConfig, report: dict) -> None:
    text = render_report(report, config.format)
    if config.out:
        with open(config.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _partial(exc: HorizonExhausted) -> None:
    seq = exc.sequence
    head = seq.values[: min(seq.horizon, 200)].tolist()
    click.echo(f"horizon exhausted at {seq.horizon} for {seq.game}: {exc}", err=True)
    click.echo(f"first {len(head)} values: {digits(head)}", err=True)


def _guarded(fn: Callable[..., int]) -> Callable[..., None]:
    """Map library exceptions to exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            code = fn(*args, **kwargs)
        except HorizonExhausted as exc:
            _partial(exc)
            code = EXIT_HORIZON
        except (UsageError, InadmissibleParameters, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            code = EXIT_USAGE
        sys.exit(code or EXIT_OK)

    return wrapper


def output_options(fn):
    opts = [
        click.option("--json", "as_json", is_flag=True, help="Emit JSON."),
        click.option("--csv", "as_csv", is_flag=True, help="Emit CSV."),
        click.option("--initial-horizon", type=int, default=4096, show_default=True),
        click.option("--max-horizon", type=int, default=DEFAULT_MAX_HORIZON, show_default=True),
        click.option("--expansion-bound", type=int, default=None, help="List expansion members up to N."),
        click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report to PATH."),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _config(as_json, as_csv, initial_horizon, max_horizon, expansion_bound, out) -> RunConfig:
    if as_json and as_csv:
        raise UsageError("--json and --csv are exclusive")
    fmt = "json" if as_json else "csv" if as_csv else "table"
    if initial_horizon < 1 or max_horizon < 1:
        raise UsageError("horizons must be positive")
    try:
        return RunConfig(min(initial_horizon, max_horizon), max_horizon, expansion_bound, fmt, out)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


class _Group(click.Group):
    def main(self, *args, **kwargs):
        # click reports its own usage errors with exit code 2; ours is 3
        kwargs.setdefault("standalone_mode", True)
        try:
            return super().main(*args, **{**kwargs, "standalone_mode": False})
        except click.exceptions.Abort:
            click.echo("aborted", err=True)
            sys.exit(EXIT_USAGE)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_USAGE)


@click.group(cls=_Group)
def main() -> None:
    """Nim-sequences, periods and expansions of subtraction games."""


def _analysis(config: RunConfig, text: str):
    game = parse_set(text)
    return game, analyze(game, config.initial_horizon, config.max_horizon)


@main.command("analyze")
@click.argument("moves")
@output_options
@_guarded
def cmd_analyze(moves, **opts) -> int:
    """Period, pre-period and nim-sequence of SET (e.g. 1,3,4)."""
    config = _config(**opts)
    game, analysis = _analysis(config, moves)
    _emit(config, game_report(game, analysis, parity_analysis(analysis)))
    return EXIT_OK


@main.command("expansion")
@click.argument("moves")
@output_options
@_guarded
def cmd_expansion(moves, **opts) -> int:
    """Expansion set of SET and its classification."""
    config = _config(**opts)
    game, analysis = _analysis(config, moves)
    report = full_report(analysis)
    _emit(config, game_report(game, analysis, expansion=report, expansion_bound=config.expansion_bound))
    return EXIT_OK


@main.command("bipartite")
@click.argument("moves")
@output_options
@_guarded
def cmd_bipartite(moves, **opts) -> int:
    """Bipartite status of SET and the boundary checks for ultimately bipartite games."""
    config = _config(**opts)
    game, analysis = _analysis(config, moves)
    report = full_report(analysis)
    finding = lemma_checks(analysis, report)
    _emit(config, game_report(
        game, analysis, expansion=report, expansion_bound=config.expansion_bound, finding=finding
    ))
    return EXIT_OK if finding.all_hold else EXIT_FINDING


_EXTRA = {"ignore_unknown_options": True, "allow_extra_args": True}


def _family_params(family_id: str, args: list[str], values: Callable[[str], object]) -> dict:
    fam = lookup_family(family_id)
    raw = parse_params(args)
    unknown = sorted(set(raw) - set(fam.params))
    if unknown:
        raise UsageError(f"{fam.id} takes {', '.join('--' + p for p in fam.params)}; got --{unknown[0]}")
    missing = [p for p in fam.params if p not in raw]
    if missing:
        raise UsageError(f"{fam.id} needs --{missing[0]}")
    return {k: values(v) for k, v in raw.items()}


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"not an integer: {text!r}") from None


@main.command("verify", context_settings=_EXTRA)
@click.argument("family_id", metavar="FAMILY")
@output_options
@click.pass_context
@_guarded
def cmd_verify(ctx, family_id, **opts) -> int:
    """Check one catalog family at one parameter tuple: verify F12 --a 6."""
    config = _config(**opts)
    params = _family_params(family_id, ctx.args, _int)
    game = SubtractionSet.of(predict(family_id, params).moves)
    analysis = analyze(game, config.initial_horizon, config.max_horizon)
    verdict = verify(family_id, params, analysis=analysis)
    report = game_report(game, analysis, verdicts=[verdict])
    _emit(config, report)
    return EXIT_OK if verdict.all_match else EXIT_FINDING


@main.command("sweep", context_settings=_EXTRA)
@click.argument("family_id", metavar="FAMILY")
@click.option("--workers", type=int, default=1, show_default=True)
@output_options
@click.pass_context
@_guarded
def cmd_sweep(ctx, family_id, workers, **opts) -> int:
    """Check a family over parameter ranges: sweep F4 --a 3..7 --b 4,6,8."""
    config = _config(**opts)
    ranges = _family_params(family_id, ctx.args, parse_values)
    verdicts = sweep(
        family_id, ranges, initial_horizon=config.initial_horizon,
        max_horizon=config.max_horizon, workers=workers,
    )
    report = {
        "family": lookup_family(family_id).id,
        "ranges": ranges,
        "verdicts": [v.to_dict() for v in verdicts],
        "summary": {
            "total": len(verdicts),
            "all_match": sum(v.all_match for v in verdicts),
            "mismatch": sum(not v.all_match and v.error is None for v in verdicts),
            "errors": sum(v.error is not None for v in verdicts),
        },
    }
    _emit(config, report)
    if any(v.error and "horizon" in v.error for v in verdicts):
        return EXIT_HORIZON
    return EXIT_OK if all(v.all_match for v in verdicts) else EXIT_FINDING


@main.command("scan")
@click.argument("which", type=click.Choice(["c1", "c2", "keven"], case_sensitive=False))
@click.option("--k", "k", default=None, help="Set size for c1/c2 [3]; k values for keven [2,4].")
@click.option("--max-sk", type=int, default=30, show_default=True, help="Largest move (c1/c2).")
@click.option("--a", "a", default="2..5", show_default=True, help="a values for keven.")
@output_options
@_guarded
def cmd_scan(which, k, max_sk, a, **opts) -> int:
    """Search for counterexamples to a conjecture or claim."""
    config = _config(**opts)
    horizons = {"initial_horizon": config.initial_horizon, "max_horizon": config.max_horizon}
    which = which.lower()
    if which == "keven":
        report = scan_keven_claim(parse_values(a), parse_values(k or "2,4"), **horizons)
    else:
        size = _int(k or "3")
        try:
            stream = list(enumerate_sets(size, max_sk))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        scan = scan_conjecture1 if which == "c1" else scan_conjecture2
        report = scan(stream, bounds={"k": size, "max_sk": max_sk}, **horizons)
    _emit(config, report.to_dict())
    if report.counterexamples:
        return EXIT_FINDING
    return EXIT_HORIZON if report.skipped else EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    main()
