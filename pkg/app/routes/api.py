from flask import Blueprint, current_app, jsonify, request

from ..algebra.errors import BettiLabError, CapExceededError, OracleBudgetError, ValidationError
from ..utils.graph_io import family_from_payload, resolve_input
from ..utils.reports import betti_report, bounds_report, hilbert_report, primes_report

api_bp = Blueprint("api", __name__, url_prefix="/api")


def _payload():
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise ValidationError("request body must be a JSON object")
    return data


def _graph(data):
    return resolve_input(graph_data=data.get("graph"), family=family_from_payload(data),
                         max_vertices=current_app.config["MAX_VERTICES"])


def _opt_int(data, key, config_key=None):
    value = data.get(key)
    if value is None:
        return current_app.config[config_key] if config_key else None
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{key} must be an integer") from None


@api_bp.errorhandler(ValidationError)
def invalid_input(e):
    return jsonify(error=str(e), kind=type(e).__name__), 400


@api_bp.errorhandler(OracleBudgetError)
@api_bp.errorhandler(CapExceededError)
def over_budget(e):
    return jsonify(error=str(e), kind=type(e).__name__), 422


@api_bp.errorhandler(BettiLabError)
def computation_failed(e):
    current_app.logger.exception("api computation failed")
    return jsonify(error=str(e), kind=type(e).__name__), 500


@api_bp.route("/health")
def health():
    return jsonify(status="ok", prime=current_app.config["FIELD_PRIME"], order=current_app.config["MONOMIAL_ORDER"])


@api_bp.route("/betti", methods=["POST"])
def betti():
    data = _payload()
    g, spec = _graph(data)
    report = betti_report(
        g, spec, data.get("method", "oracle"),
        prime=_opt_int(data, "prime", "FIELD_PRIME"),
        order=data.get("order") or current_app.config["MONOMIAL_ORDER"],
        budget=_opt_int(data, "budget", "ORACLE_BUDGET_NNZ"),
        max_i=_opt_int(data, "maxI"),
        max_j=_opt_int(data, "maxJ"),
    )
    current_app.logger.info(f"api betti on {g}")
    return jsonify(report)


@api_bp.route("/hilbert", methods=["POST"])
def hilbert():
    data = _payload()
    g, spec = _graph(data)
    report = hilbert_report(g, spec, data.get("form", "reduced"),
                            prime=_opt_int(data, "prime", "FIELD_PRIME"),
                            order=data.get("order") or current_app.config["MONOMIAL_ORDER"])
    return jsonify(report)


@api_bp.route("/primes", methods=["POST"])
def primes():
    data = _payload()
    g, spec = _graph(data)
    return jsonify(primes_report(g, spec, _opt_int(data, "cap", "PRIMES_VERTEX_CAP")))


@api_bp.route("/bounds", methods=["POST"])
def bounds():
    data = _payload()
    g, spec = _graph(data)
    return jsonify(bounds_report(g, spec, _opt_int(data, "cap", "BOUNDS_VERTEX_CAP"),
                                 _opt_int(data, "seed", "DEFAULT_SEED")))
