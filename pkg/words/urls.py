from django.urls import path
from . import views

app_name = 'words'

urlpatterns = [
    path('reduce/', views.reduce_word, name='reduce'),
]
