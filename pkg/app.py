"""
Application web Flask exposant le laboratoire en JSON.

Point d'entrée principal de l'application (`gunicorn app:app`).
"""

import logging
import sys
from pathlib import Path

# Ajouter le répertoire racine au path pour les imports
sys.path.insert(0, str(Path(__file__).parent))

from flask import Flask

from config import Config
from api import api_bp


def create_app(config_class=Config):
    """Factory function pour créer l'application Flask."""
    app = Flask(__name__)
    app.config.from_object(config_class)
    app.logger.setLevel(getattr(logging, config_class.LOG_LEVEL, logging.WARNING))

    # Enregistrer le blueprint API
    app.register_blueprint(api_bp)

    return app


# Créer l'application
app = create_app()


if __name__ == '__main__':
    app.run(debug=True, host=Config.HOST, port=Config.PORT)
