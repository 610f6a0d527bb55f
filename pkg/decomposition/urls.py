from django.urls import path
from . import views

app_name = 'decomposition'

urlpatterns = [
    path('decompose/', views.decompose, name='decompose'),
]
