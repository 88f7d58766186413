from flask import Blueprint, jsonify, request

from ..models_verify import VerificationRun

ledger_bp = Blueprint("ledger", __name__, url_prefix="/ledger")


@ledger_bp.route("/runs")
def list_runs():
    limit = request.args.get("limit", type=int) or 50
    runs = VerificationRun.query.order_by(VerificationRun.id.desc()).limit(limit).all()
    return jsonify(runs=[r.to_json() for r in runs])


@ledger_bp.route("/runs/<int:run_id>")
def run_detail(run_id: int):
    run = VerificationRun.query.get_or_404(run_id)
    return jsonify(run.to_json(with_checks=True))
