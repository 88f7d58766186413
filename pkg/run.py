import os

from app import create_app

# `flask --app run betti --family cycle --n 4` picks this app up
app = create_app(os.environ.get("BETTILAB_CONFIG", "default"))

if __name__ == "__main__":
    app.run(debug=True)
