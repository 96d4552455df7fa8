"""
FastAPI service for curvebounds
Read-only REST access to the bounds, h-vector tools and audits

Structure:
- api/main.py: App initialization and middleware (this file)
- api/models.py: Pydantic response models
- api/routes.py: All endpoint handlers
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from pathlib import Path
import sys

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from api.routes import router
from src import __version__
from src.utils.logger import setup_logger

setup_logger("src")
logger = setup_logger(__name__)

# Initialize FastAPI app
app = FastAPI(
    title="curvebounds API",
    description="Intersection bounds for curves in P^4",
    version=__version__
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["GET"],
    allow_headers=["*"],
)

# Include all routes
app.include_router(router)

logger.info("FastAPI app initialized successfully")
