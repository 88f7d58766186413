import os

from app import create_app

app = create_app(os.environ.get("BETTILAB_CONFIG", "production"))
