#!/usr/bin/env python3
"""
tuckerbound - Command Line Interface

Generate adversarial instances, run Tucker decompositions, and emit
verification reports and sweep CSVs.
"""

import argparse
import json
import os
import sys
from typing import Any, Dict, List, Optional

from loguru import logger

from __init__ import TuckerBound
from adversarial import from_metadata
from errors import ConvergenceError, InputError, OrderError, ParameterError, TuckerError
from linalg.tensor_ops import frobenius_norm_sq
from models import Algorithm, HooiConfig, HooiInit, MultilinearRank
from report.file_writer import load_tensor

EXIT_FAILURE = 1
EXIT_INVALID = 2
EXIT_IO = 3

ALGORITHM_CHOICES = ["hosvd", "sthosvd", "st_hosvd", "hooi"]


def main(argv: Optional[List[str]] = None):
    """Main CLI entry point."""
    parser = argparse.ArgumentParser(
        description="tuckerbound - Tucker decompositions and worst-case ratio verification"
    )

    # Global options
    parser.add_argument("--standalone", "--human", action="store_true",
                        help="Use human-readable output instead of JSON")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    setup_gen_command(subparsers)
    setup_decompose_command(subparsers)
    setup_verify_command(subparsers)
    setup_sweep_command(subparsers)

    args = parser.parse_args(argv)
    configure_logging()

    if not args.command:
        parser.print_help()
        sys.exit(EXIT_INVALID)

    commands = {
        "gen": execute_gen_command,
        "decompose": execute_decompose_command,
        "verify": execute_verify_command,
        "sweep": execute_sweep_command,
    }
    result = commands[args.command](args)

    if result.get("status") == "error":
        if args.standalone:
            print(f"Error: {result['error']}", file=sys.stderr)
        else:
            print(json.dumps(result), file=sys.stderr)
        sys.exit(result.get("exit_code", EXIT_FAILURE))

    if args.standalone:
        print_human_readable(result)
    else:
        print(json.dumps(result, indent=2))


def configure_logging():
    """Send log records to stderr at TUCKER_LOG_LEVEL (default WARNING)."""
    logger.remove()
    logger.add(sys.stderr, level=os.environ.get("TUCKER_LOG_LEVEL", "WARNING").upper())


def error_result(e: Exception) -> Dict[str, Any]:
    """Map an exception to an error result with its exit code."""
    if isinstance(e, ConvergenceError):
        code = EXIT_FAILURE
    elif isinstance(e, (TuckerError, ValueError)):
        code = EXIT_INVALID
    elif isinstance(e, OSError):
        code = EXIT_IO
    else:
        code = EXIT_FAILURE
    message = str(e).splitlines()[0] if str(e) else e.__class__.__name__
    return {"status": "error", "error": message, "exit_code": code}


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def print_human_readable(result: Dict[str, Any]):
    """Print result in human-readable format, reals rounded to 6 digits."""
    if result.get("message"):
        print(result["message"])

    if "metadata" in result:
        meta = result["metadata"]
        print(f"Kind: {meta['kind']}  N: {meta['order']}  epsilon: {_fmt(meta['epsilon'])}")
        print(f"Target rank: {','.join(str(r) for r in meta['target_rank'])}")
        print(f"Squared norm: {_fmt(result['frobenius_norm_sq'])}")

    if "summary" in result:
        summary = result["summary"]
        print(f"Algorithm: {summary['algorithm']}  rank: {','.join(str(r) for r in summary['rank'])}")
        print(f"Error^2: {_fmt(summary['error_sq'])}")
        print(f"Tail bound: {_fmt(summary['tail_bound'])}")
        if "iterations" in summary:
            state = "converged" if summary["converged"] else "iteration limit"
            print(f"Iterations: {summary['iterations']} ({state})")

    for report in result.get("reports", []):
        print(
            f"{report['algorithm']:>8}  N={report['N']:<2}  eps={_fmt(report['epsilon']):<8}"
            f"  error^2={_fmt(report['error_sq']):<10}"
            f"  competitor={_fmt(report['competitor_error_sq']):<10}"
            f"  ratio>={_fmt(report['ratio_lower_bound']):<10}"
            f"  tail={_fmt(report['tail_bound'])}"
        )


def setup_gen_command(subparsers):
    """Setup the gen command."""
    parser = subparsers.add_parser("gen", help="Generate an adversarial instance",
                                   description="Generate an adversarial instance")
    parser.add_argument("--kind", choices=["simple", "advanced"], required=True,
                        help="Construction family")
    parser.add_argument("--order", type=int, required=True, help="Tensor order N")
    parser.add_argument("--eps", type=float, required=True, help="Epsilon > 0")
    parser.add_argument("--out", required=True, help="Output instance JSON path")


def _add_hooi_options(parser):
    parser.add_argument("--init", choices=["hosvd", "sthosvd", "st_hosvd"], default=None,
                        help="HOOI initialization (default: hosvd)")
    parser.add_argument("--max-iter", type=int, default=None,
                        help="HOOI outer iteration cap (default: 100)")
    parser.add_argument("--tol", type=float, default=None,
                        help="HOOI relative change threshold on error^2 (default: 1e-12)")


def setup_decompose_command(subparsers):
    """Setup the decompose command."""
    parser = subparsers.add_parser("decompose", help="Run a Tucker decomposition",
                                   description="Run a Tucker decomposition")
    parser.add_argument("--alg", choices=ALGORITHM_CHOICES, required=True, help="Algorithm")
    parser.add_argument("--rank", required=True, help="Target rank R1,R2,...,RN")
    parser.add_argument("--tensor", required=True, help="Tensor or instance JSON path")
    parser.add_argument("--out", required=True, help="Output decomposition JSON path")
    parser.add_argument("--order", default=None,
                        help="ST-HOSVD mode order p1,...,pN (1-based, default 1,...,N); "
                             "sthosvd, or hooi with --init sthosvd")
    _add_hooi_options(parser)


def setup_verify_command(subparsers):
    """Setup the verify command."""
    parser = subparsers.add_parser("verify", help="Ratio report for an instance",
                                   description="Ratio report for an instance")
    parser.add_argument("--instance", required=True, help="Instance JSON path")
    parser.add_argument("--alg", choices=ALGORITHM_CHOICES, required=True, help="Algorithm")
    parser.add_argument("--out", required=True, help="Output report JSON path")
    _add_hooi_options(parser)


def setup_sweep_command(subparsers):
    """Setup the sweep command."""
    parser = subparsers.add_parser("sweep", help="Tabulate ratio reports over N and epsilon",
                                   description="Tabulate ratio reports over N and epsilon")
    parser.add_argument("--kind", choices=["simple", "advanced"], required=True,
                        help="Construction family")
    parser.add_argument("--alg", choices=ALGORITHM_CHOICES, required=True, help="Algorithm")
    parser.add_argument("--orders", required=True, help="Order range lo..hi (or a single N)")
    parser.add_argument("--eps", required=True, help="Comma-separated epsilon list")
    parser.add_argument("--csv", required=True, help="Output CSV path")
    _add_hooi_options(parser)


def parse_order_range(text: str) -> List[int]:
    """Parse "lo..hi" (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError as e:
        raise ParameterError(f"Malformed order range '{text}'") from e
    if lo > hi:
        raise ParameterError(f"Empty order range '{text}'")
    return list(range(lo, hi + 1))


def parse_epsilon_list(text: str) -> List[float]:
    parts = [part.strip() for part in text.split(",") if part.strip()]
    if not parts:
        raise ParameterError("Epsilon list is empty")
    try:
        return [float(part) for part in parts]
    except ValueError as e:
        raise ParameterError(f"Malformed epsilon list '{text}'") from e


def parse_mode_order(text: Optional[str]) -> Optional[List[int]]:
    """Parse a 1-based mode permutation into 0-based modes."""
    if text is None:
        return None
    try:
        return [int(part) - 1 for part in text.split(",")]
    except ValueError as e:
        raise OrderError(f"Malformed mode order '{text}'") from e


def hooi_config_from_args(args, base: HooiConfig) -> HooiConfig:
    """Override the configured HOOI settings with any flags given."""
    return HooiConfig(
        max_iterations=args.max_iter if args.max_iter is not None else base.max_iterations,
        tolerance=args.tol if args.tol is not None else base.tolerance,
        init=HooiInit.parse(args.init) if args.init else base.init,
    )


def uses_mode_order(algorithm: Algorithm, hooi_config: HooiConfig) -> bool:
    """Whether an ST-HOSVD mode order affects this algorithm."""
    if algorithm == Algorithm.ST_HOSVD:
        return True
    return algorithm == Algorithm.HOOI and hooi_config.init == HooiInit.ST_HOSVD


def execute_gen_command(args) -> Dict[str, Any]:
    """Execute the gen command."""
    try:
        tb = TuckerBound()
        inst = tb.generate(args.kind, args.order, args.eps)
        output_file = tb.file_writer.write_instance(inst, args.out)
        return {
            "status": "success",
            "message": f"Generated {inst.kind.value} construction N={inst.order} in {output_file}",
            "output_file": output_file,
            "metadata": inst.metadata(),
            "frobenius_norm_sq": frobenius_norm_sq(inst.tensor),
        }
    except Exception as e:
        return error_result(e)


def execute_decompose_command(args) -> Dict[str, Any]:
    """Execute the decompose command."""
    try:
        tb = TuckerBound()
        algorithm = Algorithm.parse(args.alg)
        rank = MultilinearRank.parse(args.rank)
        hooi_config = hooi_config_from_args(args, tb.hooi_config)
        order = parse_mode_order(args.order)
        if order is not None and not uses_mode_order(algorithm, hooi_config):
            raise OrderError(f"--order applies to sthosvd or to hooi with --init sthosvd, not {args.alg}")
        tensor, _ = load_tensor(args.tensor)
        decomposition, summary = tb.decompose(
            tensor, rank, algorithm,
            order=order,
            hooi_config=hooi_config,
        )
        output_file = tb.file_writer.write_decomposition(decomposition, summary, args.out)
        return {
            "status": "success",
            "message": f"Wrote {algorithm.value} decomposition to {output_file}",
            "output_file": output_file,
            "summary": summary,
        }
    except Exception as e:
        return error_result(e)


def execute_verify_command(args) -> Dict[str, Any]:
    """Execute the verify command."""
    try:
        tb = TuckerBound()
        algorithm = Algorithm.parse(args.alg)
        tensor, metadata = load_tensor(args.instance)
        if metadata is None:
            raise InputError(f"{args.instance} has no instance metadata")
        inst = from_metadata(metadata)
        if inst.tensor != tensor:
            raise InputError(f"Tensor in {args.instance} does not match its metadata")
        report = tb.verify(inst, algorithm, hooi_config=hooi_config_from_args(args, tb.hooi_config))
        output_file = tb.file_writer.write_report(report, args.out)
        return {
            "status": "success",
            "message": f"Wrote ratio report to {output_file}",
            "output_file": output_file,
            "reports": [report.to_dict()],
        }
    except Exception as e:
        return error_result(e)


def execute_sweep_command(args) -> Dict[str, Any]:
    """Execute the sweep command."""
    try:
        orders = parse_order_range(args.orders)
        epsilons = parse_epsilon_list(args.eps)
        tb = TuckerBound(hooi_max_iter=args.max_iter, hooi_tol=args.tol, hooi_init=args.init)
        reports = tb.sweep(args.kind, Algorithm.parse(args.alg), orders, epsilons)
        output_file = tb.file_writer.write_csv(reports, args.csv)
        return {
            "status": "success",
            "message": f"Wrote {len(reports)} rows to {output_file}",
            "output_file": output_file,
            "reports": [report.to_dict() for report in reports],
        }
    except Exception as e:
        return error_result(e)


if __name__ == "__main__":
    main()
