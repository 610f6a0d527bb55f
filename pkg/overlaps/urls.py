from django.urls import path
from . import views

app_name = 'overlaps'

urlpatterns = [
    path('tripod/', views.tripod, name='tripod'),
    path('examples/', views.examples, name='examples'),
]
