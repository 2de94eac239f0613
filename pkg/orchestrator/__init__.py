from orchestrator.dispatcher import RunSummary, VerificationOrchestrator
