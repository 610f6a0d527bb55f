from django.urls import path
from . import views

app_name = 'hyperbolic'

urlpatterns = [
    path('geodesic/', views.geodesic, name='geodesic'),
    path('verify/', views.verify, name='verify'),
]
