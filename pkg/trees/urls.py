from django.urls import path
from . import views

app_name = 'trees'

urlpatterns = [
    path('axis/', views.axis_detail, name='axis'),
    path('intersect/', views.intersect, name='intersect'),
]
