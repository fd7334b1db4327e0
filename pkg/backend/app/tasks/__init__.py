# Celery tasks package
