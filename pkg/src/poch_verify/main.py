import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from tabulate import tabulate
from tqdm import tqdm

from poch_verify import expression
from poch_verify.engine import verify_record
from poch_verify.numerics import PrecisionContext, RationalSampler
from poch_verify.registry import IdentityRecord, select
from poch_verify.storage import AggregateReport, VerificationReport

log = logging.getLogger(__name__)

FORMATS = ("text", "json")


class Config:
    """The program config. Maintains all file-paths, flags and options."""

    def __init__(self, work_dir: Path = Path.cwd()) -> None:
        self.work_dir = work_dir
        self.run_log = work_dir / "debug.log"
        self.id_filter = ""
        self.max_n = 10
        self.trials = 20
        self.seed = 42
        self.precision_bits = 256
        self.tolerance_exp = -80
        self.max_terms = 200
        self.max_product_factors = 400
        self.output: Optional[Path] = None
        self.format = "text"
        self.strict = False

    def initialize_dirs(self):
        """Creates all necessary directories which the program expects."""
        if not self.work_dir.exists():
            self.work_dir.mkdir(parents=True, exist_ok=True)

    def precision(self) -> PrecisionContext:
        return PrecisionContext(
            precision_bits=self.precision_bits,
            tolerance_exp=self.tolerance_exp,
            max_terms=self.max_terms,
            max_product_factors=self.max_product_factors,
        )

    def sampler(self) -> RationalSampler:
        return RationalSampler(seed=self.seed)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id_filter": self.id_filter,
            "max_n": self.max_n,
            "trials": self.trials,
            "seed": self.seed,
            "precision_bits": self.precision_bits,
            "tolerance_exp": self.tolerance_exp,
            "max_terms": self.max_terms,
            "max_product_factors": self.max_product_factors,
            "output": None if self.output is None else str(self.output),
            "format": self.format,
            "strict": self.strict,
        }

    def to_json(self) -> str:
        return json.dumps({"work_dir": str(self.work_dir), **self.to_dict()}, ensure_ascii=False)

    @staticmethod
    def from_json(line: str) -> "Config":
        data = json.loads(line)
        config = Config(Path(data.pop("work_dir")))
        output = data.pop("output")
        for key, value in data.items():
            setattr(config, key, value)
        config.output = None if output is None else Path(output)
        return config


def list_identities(id_filter: str) -> str:
    """A table of the catalog records whose id starts with `id_filter`. Empty when nothing matches."""
    records = select(id_filter)
    if not records:
        return ""
    rows = [[record.id, record.kind.value, record.anchor, record.describe_variables()] for record in records]
    return tabulate(tabular_data=rows, headers=["id", "kind", "anchor", "variables"], tablefmt="github")


def verify_all(config: Config) -> AggregateReport:
    """Verify every record matching the config's id filter, one after the other, in id order."""
    records: List[IdentityRecord] = list(select(config.id_filter))
    log.info(f"Will verify {len(records)} identities")
    ctx = config.precision()
    sampler = config.sampler()
    reports: List[VerificationReport] = []
    tqdm_iter = tqdm(records, disable=None)
    try:
        for record in tqdm_iter:
            tqdm_iter.set_description(record.id)
            reports.append(verify_record(record, sampler, ctx, config.max_n, config.trials))
    except KeyboardInterrupt:
        log.warning("Stopping.")
    return AggregateReport.from_reports(config.to_dict(), reports)


def render_report(aggregate: AggregateReport, format: str) -> str:
    if format == "json":
        return aggregate.to_json()
    lines = []
    if aggregate.reports:
        rows = [
            [
                report.id,
                report.status,
                report.points_tested,
                report.max_residual,
                report.terms_used,
                "" if report.max_n is None else report.max_n,
                report.notes,
            ]
            for report in aggregate.reports
        ]
        headers = ["id", "status", "points", "max residual", "terms", "max n", "notes"]
        lines.append(tabulate(tabular_data=rows, headers=headers, tablefmt="github"))
    for report in aggregate.reports:
        if report.witness is not None:
            lines.append(f"witness {report.id}: {json.dumps(report.witness, ensure_ascii=False)}")
    lines.append(aggregate.summary.line(aggregate.status))
    return "\n".join(lines)


def write_report(aggregate: AggregateReport, config: Config) -> Optional[str]:
    """Write the report to the configured output file, or return it for printing."""
    text = render_report(aggregate, config.format)
    if config.output is None:
        return text
    config.output.parent.mkdir(parents=True, exist_ok=True)
    with config.output.open("w", encoding="utf-8") as f:
        f.write(text + "\n")
    log.info(f"Report written to {config.output}")
    return None


def evaluate(expr: str, config: Config) -> str:
    return expression.evaluate(expr, config.precision())
