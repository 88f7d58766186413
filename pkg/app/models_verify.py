from datetime import datetime
from .models import db


class VerificationRun(db.Model):
    __tablename__ = "verification_run"
    id = db.Column(db.Integer, primary_key=True)
    started_at = db.Column(db.DateTime, default=datetime.utcnow)
    finished_at = db.Column(db.DateTime, nullable=True)
    prime = db.Column(db.Integer, nullable=False)
    families = db.Column(db.String(120), nullable=False, default="")
    n_range = db.Column(db.String(20), nullable=False, default="")
    seed = db.Column(db.Integer, nullable=False)
    status = db.Column(db.String(10), default="RUNNING")  # RUNNING / PASS / FAIL

    checks = db.relationship("VerificationCheck", backref="run", cascade="all, delete-orphan", lazy=True,
                             order_by="VerificationCheck.id")

    def counts(self):
        out = {"PASS": 0, "FAIL": 0, "SKIPPED": 0}
        for c in self.checks:
            out[c.status] = out.get(c.status, 0) + 1
        return out

    def to_json(self, with_checks: bool = False):
        data = {
            "id": self.id,
            "startedAt": self.started_at.isoformat() if self.started_at else None,
            "finishedAt": self.finished_at.isoformat() if self.finished_at else None,
            "prime": self.prime,
            "families": self.families,
            "nRange": self.n_range,
            "seed": self.seed,
            "status": self.status,
            "counts": self.counts(),
        }
        if with_checks:
            data["checks"] = [c.to_json() for c in self.checks]
        return data


class VerificationCheck(db.Model):
    __tablename__ = "verification_check"
    id = db.Column(db.Integer, primary_key=True)
    run_id = db.Column(db.Integer, db.ForeignKey("verification_run.id"), nullable=False, index=True)
    name = db.Column(db.String(120), nullable=False)
    status = db.Column(db.String(10), nullable=False)  # PASS / FAIL / SKIPPED
    detail = db.Column(db.Text, nullable=True)
    elapsed = db.Column(db.Float, default=0.0)

    def to_json(self):
        return {"name": self.name, "status": self.status, "detail": self.detail or "",
                "elapsed": round(self.elapsed or 0.0, 3)}
