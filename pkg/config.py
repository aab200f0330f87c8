"""
Configuration settings for the descent toolkit
Reads search bounds and output preferences from environment variables
"""

import logging
import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)


class Config:
    """Toolkit configuration"""

    # Descent-data search (fiber multiplicity bound)
    DESCENT_BOUND = int(os.getenv('DESCENT_BOUND', '3'))

    # Size of the test objects used for pullback-stability checks
    STABILITY_BOUND = int(os.getenv('STABILITY_BOUND', '3'))

    # Parallel enumeration
    PARALLEL = os.getenv('DESCENT_PARALLEL', 'False').lower() == 'true'
    MAX_WORKERS = int(os.getenv('DESCENT_MAX_WORKERS', '4'))

    # Reports
    REPORT_FORMAT = os.getenv('REPORT_FORMAT', 'text')
    REPORT_FORMATS = ('text', 'machine')

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING').upper()

    @classmethod
    def validate(cls):
        """Validate configuration"""
        errors = []

        if cls.DESCENT_BOUND < 1:
            errors.append("DESCENT_BOUND must be a positive integer")
        if cls.STABILITY_BOUND < 1:
            errors.append("STABILITY_BOUND must be a positive integer")
        if cls.MAX_WORKERS < 1:
            errors.append("DESCENT_MAX_WORKERS must be a positive integer")
        if cls.REPORT_FORMAT not in cls.REPORT_FORMATS:
            errors.append(f"REPORT_FORMAT must be one of {', '.join(cls.REPORT_FORMATS)}")
        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append(f"LOG_LEVEL '{cls.LOG_LEVEL}' is not a logging level")

        if errors:
            logger.error("Configuration errors:")
            for error in errors:
                logger.error("  - %s", error)
            return False

        return True
