import json
import logging
import time
from datetime import datetime
from typing import Callable, Dict

from flask_sqlalchemy import SQLAlchemy
from sqlalchemy import UniqueConstraint
from sqlalchemy.exc import IntegrityError

from .algebra.graphs import Graph

db = SQLAlchemy()

logger = logging.getLogger(__name__)


class ComputationRecord(db.Model):
    """Stored JSON result of one expensive computation on one graph."""

    __tablename__ = "computation_record"
    id = db.Column(db.Integer, primary_key=True)
    kind = db.Column(db.String(20), nullable=False, index=True)  # betti / hilbert / primes / bounds
    graph_key = db.Column(db.Text, nullable=False)
    prime = db.Column(db.Integer, nullable=False)
    order = db.Column(db.String(20), nullable=False)
    params = db.Column(db.Text, nullable=False, default="{}")
    result = db.Column(db.Text, nullable=False)
    elapsed = db.Column(db.Float, default=0.0)
    created_at = db.Column(db.DateTime, default=datetime.utcnow)

    __table_args__ = (
        UniqueConstraint("kind", "graph_key", "prime", "order", "params", name="uq_computation_record_key"),
    )

    @property
    def payload(self) -> Dict:
        return json.loads(self.result)


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def cached_compute(kind: str, graph: Graph, prime: int, order: str, params: Dict,
                   fn: Callable[[], Dict]) -> Dict:
    """Return the stored result for this key, computing and storing it on a miss.

    Hits and misses both go through one JSON round trip so callers see the
    same structure either way.
    """
    key = dict(kind=kind, graph_key=graph.canonical_key(), prime=prime, order=str(order),
               params=canonical_json(params))
    row = ComputationRecord.query.filter_by(**key).first()
    if row is not None:
        logger.debug("cache hit for %s on %s", kind, graph)
        return row.payload
    started = time.perf_counter()
    result = canonical_json(fn())
    row = ComputationRecord(result=result, elapsed=time.perf_counter() - started, **key)
    db.session.add(row)
    try:
        db.session.commit()
    except IntegrityError:
        # another worker stored the same key first
        db.session.rollback()
        logger.warning("cache insert for %s on %s lost a race; using stored row", kind, graph)
    return json.loads(result)
