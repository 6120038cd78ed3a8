from .app import app, create_app, error_status

__all__ = ["app", "create_app", "error_status"]
