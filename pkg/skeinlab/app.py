"""FastAPI application exposing the skein verification suites."""
from datetime import datetime
from typing import List, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from skeinlab.algebra.cyclotomic import RootSpec
from skeinlab.config import Config
from skeinlab.diagrams.diagram import DiagramError
from skeinlab.diagrams.io import document_to_diagram
from skeinlab.diagrams.state_sum import StateSpaceTooLarge
from skeinlab.models.diagram_document import DiagramDocument
from skeinlab.models.report import AggregateReport, EvaluationResult
from skeinlab.services.evaluation import evaluate_diagram
from skeinlab.services.verifier import OptionError, SuiteOptions, UnknownSuiteError, describe_suites, run_suites
import logging

# Configure logging to show INFO level messages
logging.basicConfig(
    level=getattr(logging, Config.LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

# Initialize FastAPI app
app = FastAPI(
    title="Skeinlab API",
    description="Exact Kauffman bracket skein computations and verification suites",
    version="1.0.0"
)

# Configure CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Pydantic models for request/response validation
class VerifyRequest(BaseModel):
    suites: List[str] = Field(default_factory=list)  # empty means every suite
    xi: Optional[str] = None  # root of unity written n/a
    n_max: Optional[int] = None
    N_max: Optional[int] = None
    k_max: Optional[int] = None
    max_states: Optional[int] = None

class EvalRequest(BaseModel):
    diagram: DiagramDocument
    xi: Optional[str] = None
    max_states: Optional[int] = None

def _root(text: Optional[str]) -> Optional[RootSpec]:
    if text is None:
        return None
    try:
        return RootSpec.parse(text)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))

@app.get("/api/suites")
async def list_suites():
    """Verification suites with their default caps."""
    return describe_suites()

@app.post("/api/verify", response_model=AggregateReport, response_model_exclude_none=True)
def verify(request: VerifyRequest):
    """Run the requested suites and return the aggregate report."""
    xi = _root(request.xi)
    try:
        options = SuiteOptions(xi=xi, n_max=request.n_max, N_max=request.N_max, k_max=request.k_max,
                               max_states=request.max_states, workers=Config.WORKERS)
        return run_suites(request.suites, options)
    except (UnknownSuiteError, OptionError, StateSpaceTooLarge) as e:
        logger.warning(f"Rejected verify request: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error running suites {request.suites}: {e}")
        import traceback
        logger.error(traceback.format_exc())
        raise HTTPException(status_code=500, detail=f"Verification failed: {str(e)}")

@app.post("/api/eval", response_model=EvaluationResult, response_model_exclude_none=True)
def evaluate(request: EvalRequest):
    """Evaluate a diagram document, optionally at a root of unity."""
    xi = _root(request.xi)
    if request.max_states is not None and not 1 <= request.max_states <= Config.HARD_MAX_STATES:
        raise HTTPException(status_code=400, detail=f"max_states must lie between 1 and {Config.HARD_MAX_STATES}")
    try:
        d, disk = document_to_diagram(request.diagram)
        return evaluate_diagram(d, disk, xi, workers=Config.WORKERS, max_states=request.max_states)
    except (DiagramError, StateSpaceTooLarge) as e:
        logger.warning(f"Rejected diagram: {e}")
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.error(f"Error evaluating diagram: {e}")
        raise HTTPException(status_code=500, detail=str(e))

@app.get("/api/health")
async def health_check():
    """Health check endpoint."""
    return {
        'status': 'healthy',
        'suites': len(Config.SUITES),
        'workers': Config.WORKERS,
        'timestamp': datetime.now().isoformat()
    }

if __name__ == '__main__':
    import uvicorn
    uvicorn.run(
        "skeinlab.app:app",
        host="0.0.0.0",
        port=5000,
        reload=Config.DEBUG
    )
