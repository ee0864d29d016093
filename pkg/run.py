"""
Launch the toolkit API under uvicorn
"""

import os

import uvicorn

from app.config import get_settings

if __name__ == "__main__":
    settings = get_settings()
    print(f"Numeric carrier: {settings.precision}, rounding threshold {settings.rounding_threshold:g}")
    uvicorn.run(
        "app.main:app",
        host=os.environ.get("QGRASS_HOST", "127.0.0.1"),
        port=int(os.environ.get("QGRASS_PORT", "8000")),
        reload=False,
        log_level="info"
    )
