import os
from dotenv import load_dotenv
from os import environ
from fractions import Fraction

# Load environment variables from .env file
load_dotenv()

class Config:
    LOG_LEVEL = environ.get('FIXPOINT_LOG_LEVEL', 'WARNING').upper()
    LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
    SHOW_TRACEBACKS = False

    # Exhaustive enumeration refuses spaces with more than this many self-maps
    MAX_ENUMERATED_MAPS = int(environ.get('FIXPOINT_MAX_ENUMERATED_MAPS', 10_000_000))

    # Random search
    DEFAULT_TRIALS = int(environ.get('FIXPOINT_DEFAULT_TRIALS', 1000))
    WEIGHT_RANGE = (
        Fraction(environ.get('FIXPOINT_WEIGHT_MIN', '1')),
        Fraction(environ.get('FIXPOINT_WEIGHT_MAX', '10')),
    )
    WEIGHT_GRID_DENOMINATOR = 100

class DevelopmentConfig(Config):
    SHOW_TRACEBACKS = True

class ProductionConfig(Config):
    LOG_LEVEL = environ.get('FIXPOINT_LOG_LEVEL', 'ERROR').upper()

# Select configuration based on environment
config = ProductionConfig if os.getenv('FIXPOINT_ENV') == 'production' else DevelopmentConfig
