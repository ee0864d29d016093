"""
Main FastAPI application for the quantum Grassmannian toolkit
"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app import __version__
from app.routes import router

# Create FastAPI app
app = FastAPI(
    title="Quantum Grassmannian Toolkit API",
    description="Gromov-Witten invariants, totally positive points and identity checks for Gr_d(n)",
    version=__version__,
    docs_url="/docs",
    redoc_url="/redoc"
)

# Configure CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Include routes
app.include_router(router, prefix="/api/v1")


@app.get("/")
async def root():
    """Root endpoint"""
    return {
        "message": "Welcome to the Quantum Grassmannian Toolkit API",
        "docs": "/docs",
        "version": __version__
    }


if __name__ == "__main__":
    import uvicorn
    uvicorn.run(app, host="0.0.0.0", port=8000)
