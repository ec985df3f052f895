"""
Command Line Controller
Routes polycat subcommands to the services and renders deterministic reports
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..constants import (
    DEFAULT_LOG_LEVEL, DEFAULT_MAX_NODES, EXIT_FAILS, EXIT_HOLDS, EXIT_INPUT_ERROR, KIND_DISTRIBUTOR, KIND_FINCAT,
    KIND_FUNCTOR, KIND_LAXFUNCTOR, KIND_NORM, KIND_POLYMAP, KIND_SIGNATURE, KIND_TENSOR, LOG_FORMAT, SIDE_IN,
    SIDE_OUT, VERDICT_FAILS, VERDICT_HOLDS,
)
from ..exceptions import PolycatError, UnknownCommand
from ..models.functor import PolyFunctor, unique_functor_to_terminal
from ..models.lax_functor import LaxNormalFunctor
from ..models.polycategory import Boundary, FinPolycategory, PolyMap
from ..models.workspace import Workspace, WorkspaceConfiguration
from ..services.axiom_service import check_axioms
from ..services.distributor_service import co_yoneda_check
from ..services.dto import Decision, Report
from ..services.elements_service import (
    build_elements, check_elements, check_lax_normal, grothendieck_crosscheck, mvar_check, random_lax_functor,
    roundtrip_check, roundtrip_functor_check,
)
from ..services.fibration_service import (
    birep_bifib_crosscheck, check_functor, decide_bifibration, frobenius_monoids, is_in_cartesian, is_out_cartesian,
)
from ..services.free_service import check_free_laws, enumerate_trees
from ..services.norm_service import (
    crossnorm_contractive_equivalence, dual_norm_eval, gauge, injective_norm, injective_unit_ball, norm_value,
    projective_norm, projective_unit_ball, pullback_norm, pushforward_norm, scaled,
)
from ..services.parser_factory import parse_input
from ..services.transformers import TermTransformer
from ..services.universal_service import decide_birepresentable, is_in_universal, is_out_universal
from ..utils import format_rational, format_vector, parse_rational

_logger = logging.getLogger(__name__)

RANDOM_FUNCTOR = 'random'
CANDIDATE_PRESETS = ('projective', 'injective')


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting"""

    def error(self, message):
        raise UnknownCommand(f"{self.prog}: {message}", error_code='unknown_command')


def parse_vector(text: str) -> Tuple:
    """Comma separated rationals, e.g. "1/2,-1\""""
    return tuple(parse_rational(part) for part in text.split(',') if part.strip() != '')


def parse_boundary(text: str) -> Boundary:
    """ "A,B->B" with either side possibly empty"""
    if '->' not in text:
        raise UnknownCommand(f"Boundary {text!r} must have the form 'A,B->C'", error_code='unknown_command')
    left, right = text.split('->', 1)

    def objects(side: str) -> Tuple[str, ...]:
        return tuple(obj.strip() for obj in side.split(',') if obj.strip())
    return Boundary(objects(left), objects(right))


def _decision_report(command: str, decision: Decision) -> Report:
    return Report(command, decision.verdict, evidence=list(decision.evidence), notes=list(decision.notes))


def _check_report(command: str, report, notes: Sequence[str] = ()) -> Report:
    return Report(command, VERDICT_HOLDS if report.passed else VERDICT_FAILS, evidence=report.evidence(),
                  notes=list(notes))


class WorkbenchController:
    """One command against one workspace"""

    def __init__(self, configuration: WorkspaceConfiguration):
        self.workspace = Workspace(configuration)

    @property
    def configuration(self) -> WorkspaceConfiguration:
        return self.workspace.configuration

    def load(self, path: str, expected: Optional[str] = None):
        if path in self.workspace:
            return self.workspace.get(path)
        return self.workspace.add(path, parse_input(path, self.configuration, expected))

    def load_polycategory(self, path: str) -> FinPolycategory:
        presentation = self.load(path)
        if not isinstance(presentation, FinPolycategory):
            raise PolycatError(f"{path} is not a polycategory", error_code='wrong_kind')
        return presentation

    # check

    def check(self, args, command: str) -> Report:
        if args.what == 'polycat':
            P = self.load_polycategory(args.file)
            report = check_axioms(P, exhaustive=args.exhaustive)
            notes = [f"bound-relative: laws checked up to arity {report.bound}"] if report.bound_relative else []
            return Report(command, VERDICT_HOLDS if report.passed else VERDICT_FAILS, evidence=report.evidence(),
                          notes=notes)
        if args.what == 'functor':
            return _check_report(command, check_functor(self.load(args.file, KIND_FUNCTOR)))
        if args.what == 'category':
            category = self.load(args.file, KIND_FINCAT)
            return Report(command, VERDICT_HOLDS, evidence=[category.describe()])
        if args.what == 'distributor':
            return _check_report(command, co_yoneda_check(self.load(args.file, KIND_DISTRIBUTOR)))
        return _check_report(command, check_lax_normal(self.load(args.file, KIND_LAXFUNCTOR)))

    # free

    def free(self, args, command: str) -> Report:
        signature = self.load(args.signature, KIND_SIGNATURE)
        if args.action == 'compose':
            tree = TermTransformer.parse_expression(args.expression, signature)
            return Report(command, VERDICT_HOLDS, evidence=[
                f"boundary: {tree.boundary}", f"nodes: {tree.size}", f"encoding: {tree.encoding()}"])
        if args.action == 'enum':
            boundary = parse_boundary(args.boundary)
            trees = enumerate_trees(signature, boundary, args.max_nodes)
            evidence = [f"{len(trees)} trees with boundary {boundary} and at most {args.max_nodes} nodes"]
            evidence += [tree.encoding() for tree in trees]
            return Report(command, VERDICT_HOLDS, evidence=evidence)
        report = check_free_laws(signature, args.max_item_nodes, self.configuration.arity_bound)
        return Report(command, VERDICT_HOLDS if report.passed else VERDICT_FAILS, evidence=report.evidence(),
                      notes=[f"law instances over trees with at most {args.max_item_nodes} nodes"])

    # universal objects and fibrations

    def _find_polymap(self, P: FinPolycategory, map_id: str, dom: Optional[str], cod: Optional[str]) -> PolyMap:
        matches = [f for f in P.polymaps() if f.id == map_id
                   and (dom is None or f.domain == parse_boundary(f"{dom}->").domain)
                   and (cod is None or f.codomain == parse_boundary(f"->{cod}").codomain)]
        if not matches:
            raise PolycatError(f"No polymap {map_id} in {P.name}", error_code='unknown_polymap')
        if len(matches) > 1:
            shapes = ', '.join(str(f.boundary) for f in matches[:3])
            raise PolycatError(f"{map_id} names {len(matches)} polymaps ({shapes}, ...); give --dom and --cod",
                               error_code='ambiguous_polymap')
        return matches[0]

    def universal(self, args, command: str) -> Report:
        P = self.load_polycategory(args.file)
        f = self._find_polymap(P, args.map, args.dom, args.cod)
        to_terminal = unique_functor_to_terminal(P)
        if args.side == SIDE_OUT:
            cert, cart = is_out_universal(P, f, args.pos), is_out_cartesian(to_terminal, f, args.pos)
        else:
            cert, cart = is_in_universal(P, f, args.pos), is_in_cartesian(to_terminal, f, args.pos)
        evidence = [cert.describe(), f"cartesian over terminal: {VERDICT_HOLDS if cart.passed else VERDICT_FAILS}"]
        if cert.passed != cart.passed:
            _logger.error(f"Universal and cartesian-over-terminal disagree on {f} at {args.pos}")
            evidence.append('universal and cartesian-over-terminal disagree')
        notes = [f"bound-relative: checked up to arity {cert.bound}, {cert.skipped_instances} instances skipped"] \
            if cert.bound_relative else []
        return Report(command, VERDICT_HOLDS if cert.passed else VERDICT_FAILS, evidence=evidence, notes=notes)

    def birep(self, args, command: str) -> Report:
        return _decision_report(command, decide_birepresentable(self.load_polycategory(args.file)))

    def bifib(self, args, command: str) -> Report:
        presentation = self.load(args.file)
        functor = presentation if isinstance(presentation, PolyFunctor) else unique_functor_to_terminal(presentation)
        return _decision_report(command, decide_bifibration(functor))

    def crosscheck(self, args, command: str) -> Report:
        decision = birep_bifib_crosscheck(self.load_polycategory(args.file))
        return _decision_report(command, decision)

    def frobenius(self, args, command: str) -> Report:
        P = self.load_polycategory(args.file)
        families = frobenius_monoids(P, args.object, args.max_arity, args.limit)
        evidence = [f"{len(families)} families on {args.object}"] + [fm.describe() for fm in families]
        return Report(command, VERDICT_HOLDS if families else VERDICT_FAILS, evidence=evidence)

    # norms

    def _norms(self, paths: Sequence[str]) -> List:
        return [self.load(path, KIND_NORM) for path in paths]

    def _candidate(self, text: str, factors: Sequence, scale: Optional[str]):
        if text == 'projective':
            candidate = projective_unit_ball(factors)
        elif text == 'injective':
            candidate = injective_unit_ball(factors)
        else:
            candidate = self.load(text, KIND_NORM)
        return scaled(candidate, parse_rational(scale)) if scale else candidate

    def norm(self, args, command: str) -> Report:
        action = args.action
        if action == 'gauge':
            norm = self.load(args.norm, KIND_NORM)
            value = gauge(norm.vertices, parse_vector(args.vector))
            return Report(command, VERDICT_HOLDS, value=format_rational(value))
        if action == 'dual':
            norm = self.load(args.norm, KIND_NORM)
            value = dual_norm_eval(norm, parse_vector(args.vector))
            return Report(command, VERDICT_HOLDS, value=format_rational(value))
        if action in ('proj', 'inj'):
            u = self.load(args.tensor, KIND_TENSOR)
            compute = projective_norm if action == 'proj' else injective_norm
            return Report(command, VERDICT_HOLDS, value=format_rational(compute(u, self._norms(args.norms))))
        if action in ('pull', 'push'):
            h = self.load(args.map, KIND_POLYMAP)
            norms = self._norms(args.norms)
            if action == 'pull':
                split = len(h.input_dims) - 1
                result = pullback_norm(h, args.index, norms[:split], norms[split:])
            else:
                split = len(h.input_dims)
                result = pushforward_norm(h, args.index, norms[:split], norms[split:])
            if args.at:
                return Report(command, VERDICT_HOLDS, value=str(norm_value(result, parse_vector(args.at))))
            evidence = [result.describe()]
            evidence += [f"vertex {format_vector(v)}" for v in result.vertices or ()]
            evidence += [f"covector {format_vector(c)}" for c in result.covectors or ()]
            return Report(command, VERDICT_HOLDS, evidence=evidence, notes=list(result.notes))
        factors = self._norms(args.norms)
        candidate = self._candidate(args.candidate, factors, args.scale)
        return _decision_report(command, crossnorm_contractive_equivalence(candidate, factors))

    # elements

    def _lax_functor(self, path: str) -> LaxNormalFunctor:
        if path == RANDOM_FUNCTOR:
            return random_lax_functor(self.configuration.seed)
        return self.load(path, KIND_LAXFUNCTOR)

    def elements(self, args, command: str) -> Report:
        if args.action == 'roundtrip':
            presentation = self._lax_functor(args.file) if args.file == RANDOM_FUNCTOR else self.load(args.file)
            if isinstance(presentation, PolyFunctor):
                return _check_report(command, roundtrip_functor_check(presentation))
            return _check_report(command, roundtrip_check(presentation))
        F = self._lax_functor(args.file)
        if args.action == 'build':
            construction = build_elements(F)
            report = check_elements(construction, F)
            return Report(command, VERDICT_HOLDS if report.passed else VERDICT_FAILS,
                          evidence=[construction.describe()] + report.evidence())
        if args.action == 'mvar':
            return _decision_report(command, mvar_check(F))
        return _decision_report(command, grothendieck_crosscheck(F))

    # export

    def export(self, args, command: str) -> Report:
        signature = self.load(args.signature, KIND_SIGNATURE)
        tree = TermTransformer.parse_expression(args.expression, signature)
        return Report(command, VERDICT_HOLDS, value=TermTransformer.tree_to_dot(tree, args.name).rstrip('\n'))


def build_parser() -> CommandParser:
    parser = CommandParser(prog='polycat', description='Finite polycategory workbench')
    parser.add_argument('--bound', type=int, default=None, help='arity bound for monoid presentations')
    parser.add_argument('--seed', type=int, default=None, help='seed for randomized commands')
    parser.add_argument('--log-level', default=DEFAULT_LOG_LEVEL,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])
    commands = parser.add_subparsers(dest='command', parser_class=CommandParser)
    commands.required = True

    check = commands.add_parser('check')
    check.add_argument('what', choices=['polycat', 'functor', 'category', 'distributor', 'laxfunctor'])
    check.add_argument('file')
    check.add_argument('--exhaustive', action='store_true', help='enumerate instances of monoid presentations')

    free = commands.add_parser('free')
    free_actions = free.add_subparsers(dest='action', parser_class=CommandParser)
    free_actions.required = True
    compose = free_actions.add_parser('compose')
    compose.add_argument('signature')
    compose.add_argument('expression')
    enum = free_actions.add_parser('enum')
    enum.add_argument('signature')
    enum.add_argument('--boundary', required=True)
    enum.add_argument('--max-nodes', type=int, default=DEFAULT_MAX_NODES)
    laws = free_actions.add_parser('laws')
    laws.add_argument('signature')
    laws.add_argument('--max-item-nodes', type=int, default=2)

    universal = commands.add_parser('universal')
    universal.add_argument('file')
    universal.add_argument('--map', required=True)
    universal.add_argument('--pos', type=int, required=True)
    universal.add_argument('--side', choices=[SIDE_OUT, SIDE_IN], default=SIDE_OUT)
    universal.add_argument('--dom', default=None, help='domain of the polymap, e.g. A,B')
    universal.add_argument('--cod', default=None)

    for name in ('birep', 'bifib'):
        commands.add_parser(name).add_argument('file')
    crosscheck = commands.add_parser('crosscheck')
    crosscheck.add_argument('which', choices=['birep-bifib'])
    crosscheck.add_argument('file')

    frobenius = commands.add_parser('frobenius')
    frobenius.add_argument('file')
    frobenius.add_argument('--object', required=True)
    frobenius.add_argument('--max-arity', type=int, default=None, help='truncate families at this arity')
    frobenius.add_argument('--limit', type=int, default=None)

    norm = commands.add_parser('norm')
    norm_actions = norm.add_subparsers(dest='action', parser_class=CommandParser)
    norm_actions.required = True
    for name in ('gauge', 'dual'):
        sub = norm_actions.add_parser(name)
        sub.add_argument('norm')
        sub.add_argument('vector')
    for name in ('proj', 'inj'):
        sub = norm_actions.add_parser(name)
        sub.add_argument('tensor')
        sub.add_argument('norms', nargs='+')
    for name in ('pull', 'push'):
        sub = norm_actions.add_parser(name)
        sub.add_argument('map')
        sub.add_argument('index', type=int)
        sub.add_argument('norms', nargs='*')
        sub.add_argument('--at', default=None, help='print the value at this vector')
    cross = norm_actions.add_parser('crosscheck')
    cross.add_argument('candidate', help=f"a norm file or one of {', '.join(CANDIDATE_PRESETS)}")
    cross.add_argument('norms', nargs='+')
    cross.add_argument('--scale', default=None)

    elements = commands.add_parser('elements')
    elements.add_argument('action', choices=['build', 'roundtrip', 'mvar', 'grothendieck'])
    elements.add_argument('file', help=f"a laxfunctor file, or '{RANDOM_FUNCTOR}' for the seeded generator")

    export = commands.add_parser('export')
    export.add_argument('format', choices=['dot'])
    export.add_argument('signature')
    export.add_argument('expression')
    export.add_argument('--name', default='tree')
    return parser


def _configure_logging(level: str):
    root = logging.getLogger()
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
    root.setLevel(level)


def _exit_code(report: Report) -> int:
    return EXIT_HOLDS if report.verdict == VERDICT_HOLDS else EXIT_FAILS


def run_command(argv: Sequence[str], environ=None) -> Tuple[Report, int]:
    """
    Parse argv, run the command and map its verdict to an exit code

    Returns:
        (report, exit code); any PolycatError gives an error report and exit 2
    """
    argv = list(argv)
    command = ' '.join(argv)
    try:
        args = build_parser().parse_args(argv)
        configuration = WorkspaceConfiguration.resolve(
            arity_bound=args.bound, seed=args.seed, environ=environ)
        controller = WorkbenchController(configuration)
        handlers: Dict[str, Callable] = {
            'check': controller.check,
            'free': controller.free,
            'universal': controller.universal,
            'birep': controller.birep,
            'bifib': controller.bifib,
            'crosscheck': controller.crosscheck,
            'frobenius': controller.frobenius,
            'norm': controller.norm,
            'elements': controller.elements,
            'export': controller.export,
        }
        report = handlers[args.command](args, command)
        _logger.info(f"{command}: {report.verdict}")
        return report, _exit_code(report)
    except PolycatError as e:
        _logger.error(f"{command}: {e.message}")
        report = Report(command, 'error', evidence=[f"{e.error_code or 'error'}: {e.message}"])
        return report, EXIT_INPUT_ERROR


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    levels = argparse.ArgumentParser(add_help=False)
    levels.add_argument('--log-level', default=DEFAULT_LOG_LEVEL)
    known, _ = levels.parse_known_args(argv)
    level = known.log_level.upper()
    _configure_logging(level if isinstance(logging.getLevelName(level), int) else DEFAULT_LOG_LEVEL)
    report, code = run_command(argv)
    if code == EXIT_INPUT_ERROR:
        sys.stderr.write(report.evidence[0] + '\n')
    else:
        sys.stdout.write(report.render())
    return code


if __name__ == '__main__':
    sys.exit(main())
