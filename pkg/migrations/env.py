"""Alembic environment bound to the Flask-SQLAlchemy ``db`` of the running app."""
import logging
from logging.config import fileConfig

from alembic import context
from flask import current_app

config = context.config
fileConfig(config.config_file_name)
logger = logging.getLogger("alembic.env")

migrate_ext = current_app.extensions["migrate"]
target_db = migrate_ext.db


def engine():
    return target_db.engine


def engine_url() -> str:
    # '%' would be read as interpolation by configparser
    return engine().url.render_as_string(hide_password=False).replace("%", "%%")


def metadata():
    if hasattr(target_db, "metadatas"):
        return target_db.metadatas[None]
    return target_db.metadata


config.set_main_option("sqlalchemy.url", engine_url())


def skip_empty_autogenerate(context, revision, directives):
    if getattr(config.cmd_opts, "autogenerate", False) and directives[0].upgrade_ops.is_empty():
        directives[:] = []
        logger.info("schema unchanged; no revision written")


def run_offline():
    context.configure(url=config.get_main_option("sqlalchemy.url"), target_metadata=metadata(), literal_binds=True)
    with context.begin_transaction():
        context.run_migrations()


def run_online():
    args = dict(migrate_ext.configure_args)
    args.setdefault("process_revision_directives", skip_empty_autogenerate)
    # SQLite cannot ALTER constraints in place
    args.setdefault("render_as_batch", engine().url.get_backend_name() == "sqlite")
    with engine().connect() as connection:
        context.configure(connection=connection, target_metadata=metadata(), **args)
        with context.begin_transaction():
            context.run_migrations()


if context.is_offline_mode():
    run_offline()
else:
    run_online()
