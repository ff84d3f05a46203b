from pathlib import Path

import click
from loguru import logger

from config import DEFAULT_BENCHMARK_SEED, INCLUSION_BUDGET, LOG_LEVEL
from core.verifier import CircuitVerifier
from frontend import parse_pqasm, parse_qasm, serialize_pqasm, serialize_qasm
from models.circuit import Circuit
from models.enums import BugScenario
from models.errors import VerifierError
from models.report import VerificationOptions, VerificationReport
from speckit import BENCHMARKS, generate, inject_bug, parse_lsta, serialize_lsta
from utils import setup_logging, write_output, format_qubit_count
from .report import render_report

EXIT_ERROR = 2

_existing_file = click.Path(exists=True, dir_okay=False, path_type=Path)


def _read_circuit(path: Path, param: bool) -> Circuit:
    """Parse a circuit file; .pqasm files are always parameterized"""
    text = path.read_text()
    if param or path.suffix == ".pqasm":
        return parse_pqasm(text)
    return parse_qasm(text)


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    raise SystemExit(EXIT_ERROR)


def _emit(report: VerificationReport, as_json: bool, show_sizes: bool):
    click.echo(render_report(report, as_json, show_sizes))
    if report.message:
        click.echo(f"error: {report.message}", err=True)
    raise SystemExit(report.exit_code)


@click.group(name="lsta-verify")
@click.option("--log-level", default=LOG_LEVEL, show_default=True,
              type=click.Choice(["TRACE", "DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              help="Diagnostics level on stderr")
def cli(log_level: str):
    """Verify quantum circuits against LSTA pre- and postconditions."""
    setup_logging(log_level)


@cli.command()
@click.option("--pre", "pre_path", required=True, type=_existing_file, help="Precondition (.lsta)")
@click.option("--circuit", "circuit_path", required=True, type=_existing_file, help="Circuit (.qasm or .pqasm)")
@click.option("--post", "post_path", required=True, type=_existing_file, help="Postcondition (.lsta)")
@click.option("--param", is_flag=True, help="Read the circuit as a parameterized pqasm program")
@click.option("--no-reduce", is_flag=True, help="Skip the reduction after every gate")
@click.option("--budget", type=click.IntRange(min=1), default=INCLUSION_BUDGET, show_default=True,
              help="Maximum number of inclusion vertices")
@click.option("--check-equality", is_flag=True, help="Also check the reverse inclusion")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON")
@click.option("--sizes", "show_sizes", is_flag=True, help="Print the per-gate size table")
def verify(pre_path: Path, circuit_path: Path, post_path: Path, param: bool, no_reduce: bool,
           budget: int, check_equality: bool, as_json: bool, show_sizes: bool):
    """Check {PRE} CIRCUIT {POST}."""
    try:
        pre = parse_lsta(pre_path.read_text())
        post = parse_lsta(post_path.read_text())
        circuit = _read_circuit(circuit_path, param)
    except VerifierError as e:
        _fail(str(e))

    options = VerificationOptions(reduce_after_gate=not no_reduce, inclusion_budget=budget,
                                  check_equality=check_equality)
    logger.info(f"🧪 {circuit_path.name}: {len(circuit)} gates on "
                f"{format_qubit_count(circuit.qubit_count)} qubits")
    _emit(CircuitVerifier(options).run_verification(pre, circuit, post), as_json, show_sizes)


@cli.command()
@click.argument("first", type=_existing_file)
@click.argument("second", type=_existing_file)
@click.option("--no-reduce", is_flag=True, help="Skip the reduction after every gate")
@click.option("--budget", type=click.IntRange(min=1), default=INCLUSION_BUDGET, show_default=True,
              help="Maximum number of inclusion vertices")
@click.option("--json", "as_json", is_flag=True, help="Print the report as JSON")
@click.option("--sizes", "show_sizes", is_flag=True, help="Print the per-gate size table")
def eqcheck(first: Path, second: Path, no_reduce: bool, budget: int, as_json: bool, show_sizes: bool):
    """Check that two OpenQASM circuits implement the same unitary."""
    try:
        c1 = parse_qasm(first.read_text())
        c2 = parse_qasm(second.read_text())
    except VerifierError as e:
        _fail(str(e))

    options = VerificationOptions(reduce_after_gate=not no_reduce, inclusion_budget=budget)
    _emit(CircuitVerifier(options).run_eqcheck(c1, c2), as_json, show_sizes)


@cli.command()
@click.argument("family", type=click.Choice(sorted(BENCHMARKS)))
@click.option("-n", "n", type=click.IntRange(min=1), default=2, show_default=True, help="Benchmark size")
@click.option("-k", "k", type=click.IntRange(0, 1), default=0, show_default=True,
              help="Target value for mctoffoli")
@click.option("-o", "--output", "output", required=True, type=click.Path(file_okay=False, path_type=Path),
              help="Directory for pre.lsta, post.lsta and the circuit")
def gen(family: str, n: int, k: int, output: Path):
    """Write a benchmark triple to a directory."""
    try:
        bench = generate(family, n, k)
    except VerifierError as e:
        _fail(str(e))

    if bench.is_parameterized:
        circuit_file = write_output(output, "circuit.pqasm", serialize_pqasm(bench.circuit))
    else:
        circuit_file = write_output(output, "circuit.qasm", serialize_qasm(bench.circuit))
    pre_file = write_output(output, "pre.lsta", serialize_lsta(bench.pre, f"{bench.name} precondition"))
    post_file = write_output(output, "post.lsta", serialize_lsta(bench.post, f"{bench.name} postcondition"))
    logger.info(f"📦 generated {bench.name} in {output}")
    for path in (pre_file, circuit_file, post_file):
        click.echo(str(path))


@cli.command()
@click.argument("circuit_path", type=_existing_file)
@click.option("--scenario", required=True, type=click.Choice([s.value for s in BugScenario]),
              help="Kind of bug to inject")
@click.option("--seed", type=int, default=DEFAULT_BENCHMARK_SEED, show_default=True,
              help="Seed choosing the mutated gate")
@click.option("--param", is_flag=True, help="Read the circuit as a parameterized pqasm program")
@click.option("-o", "--output", "output", type=click.Path(dir_okay=False, path_type=Path),
              help="Write the mutated circuit here instead of stdout")
def inject(circuit_path: Path, scenario: str, seed: int, param: bool, output):
    """Write a copy of a circuit with one injected bug."""
    try:
        circuit = _read_circuit(circuit_path, param)
        mutated = inject_bug(circuit, BugScenario(scenario), seed)
    except VerifierError as e:
        _fail(str(e))

    text = serialize_pqasm(mutated) if mutated.is_parameterized else serialize_qasm(mutated)
    if output is None:
        click.echo(text, nl=False)
    else:
        write_output(output.parent, output.name, text)
        click.echo(str(output))
