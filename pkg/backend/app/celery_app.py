"""
Celery application for fanning sweep members out to workers.
"""
from celery import Celery

from app.config import get_settings

settings = get_settings()

BROKER_URL = settings.celery_broker_url or "redis://localhost:6379/0"
RESULT_BACKEND = settings.celery_result_backend or BROKER_URL

celery_app = Celery(
    "alglab",
    broker=BROKER_URL,
    backend=RESULT_BACKEND,
    include=["app.tasks.sweep_tasks"]
)

# Celery configuration
celery_app.conf.update(
    task_serializer="json",
    accept_content=["json"],
    result_serializer="json",
    timezone="UTC",
    enable_utc=True,
    task_track_started=True,
    task_time_limit=600,  # 10 minutes
    task_soft_time_limit=300,  # 5 minutes
    worker_prefetch_multiplier=1,
    result_expires=3600,  # 1 hour
)
