import logging

from flask import Flask
from flask_migrate import Migrate
from .models import db
from .models_verify import VerificationRun  # noqa: F401  (registers the ledger tables)
from .routes.api import api_bp
from .routes.ledger import ledger_bp
from .cli import register_commands
from config import config_by_name


def create_app(config_name: str = "default"):
    app = Flask(__name__)
    app.config.from_object(config_by_name[config_name])

    level = getattr(logging, str(app.config.get("LOG_LEVEL", "INFO")).upper(), logging.INFO)
    app.logger.setLevel(level)
    logging.getLogger("app").setLevel(level)
    if not logging.getLogger().handlers:
        logging.basicConfig(format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    db.init_app(app)
    Migrate(app, db)

    # Blueprints
    app.register_blueprint(api_bp)
    app.register_blueprint(ledger_bp)

    register_commands(app)

    with app.app_context():
        db.create_all()

    return app
