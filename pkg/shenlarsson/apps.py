from django.apps import AppConfig


class ShenLarssonConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "shenlarsson"
    verbose_name = "Shen-Larsson modules over the Hamiltonian Lie algebra"
